// burau: command-line front end.
//
// Exit codes: 0 success (for verify-kernel: certified kernel element),
// 1 negative verification, 2 usage or input errors, 3 undecidable within
// configured resource bounds.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burau/artin.hpp"
#include "burau/braid.hpp"
#include "burau/burau.hpp"
#include "burau/disc.hpp"
#include "burau/fixtures.hpp"
#include "burau/kernel.hpp"
#include "burau/report.hpp"
#include "burau/search.hpp"

namespace {

using namespace burau;
using report::json;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ArcFixture resolve_fixture(const std::string& name) {
  if (std::filesystem::exists(name)) return load_arcs(name);
  if (auto text = fixtures::builtin(name)) return parse_arcs(*text);
  throw UsageError("no fixture file or built-in fixture named '" + name + "' (built-ins: fig3, fig5)");
}

BraidWord resolve_word(int n, const std::string& word, std::optional<int> paper) {
  if (paper) {
    if (*paper != n) throw UsageError("--paper requires --n to match the element (5 or 6)");
    return paper_kernel_element(n);
  }
  return parse_word(word, n);
}

void print_matrix_text(const BurauMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(static_cast<std::size_t>(m.size()), 0);
  for (int i = 0; i < m.size(); ++i) {
    cells.emplace_back();
    for (int j = 0; j < m.size(); ++j) {
      cells.back().push_back(m(i, j).to_string());
      width[static_cast<std::size_t>(j)] =
          std::max(width[static_cast<std::size_t>(j)], cells.back().back().size());
    }
  }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::cout << (j ? " | " : "") << row[j]
                << std::string(j + 1 < row.size() ? width[j] - row[j].size() : 0, ' ');
    }
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burau representation, lifted pairings and kernel certification"};
  app.require_subcommand(1);

  // burau
  auto* burau_cmd = app.add_subcommand("burau", "Print the Burau matrix of a braid word");
  int b_n = 0;
  std::string b_word;
  std::string b_variant = "reduced";
  bool b_paper = false;
  bool b_at_one = false;
  bool b_json = false;
  burau_cmd->add_option("--n", b_n, "strand count")->required()->check(CLI::Range(2, 64));
  auto* b_word_opt = burau_cmd->add_option("--word", b_word, "braid word, e.g. \"s1 s2^-1\"");
  auto* b_paper_flag =
      burau_cmd->add_flag("--paper", b_paper, "use the built-in kernel element for --n");
  b_word_opt->excludes(b_paper_flag);
  burau_cmd->add_option("--variant", b_variant, "reduced | unreduced")
      ->check(CLI::IsMember({"reduced", "unreduced"}));
  burau_cmd->add_flag("--at-one", b_at_one, "also print the specialization t = 1");
  burau_cmd->add_flag("--json", b_json, "machine-readable output");

  // pairing
  auto* pairing_cmd = app.add_subcommand("pairing", "Lifted intersection pairing of two arcs");
  std::string p_fixture;
  std::string p_alpha = "alpha";
  std::string p_beta = "beta";
  std::string p_svg;
  bool p_show = false;
  bool p_json = false;
  pairing_cmd->add_option("--fixture", p_fixture, "fixture file or built-in name (fig3, fig5)")
      ->required();
  pairing_cmd->add_option("--alpha", p_alpha, "name of the arc alpha");
  pairing_cmd->add_option("--beta", p_beta, "name of the arc beta");
  pairing_cmd->add_option("--svg", p_svg, "write an annotated drawing");
  pairing_cmd->add_flag("--show-crossings", p_show, "list every crossing");
  pairing_cmd->add_flag("--json", p_json, "machine-readable output");

  // verify-kernel
  auto* verify_cmd = app.add_subcommand("verify-kernel", "Certify a Burau-kernel element");
  int v_n = 0;
  std::string v_word;
  bool v_paper = false;
  bool v_json = false;
  std::size_t v_bound = ArtinAutomorphism::default_length_bound;
  verify_cmd->add_option("--n", v_n, "strand count")->required()->check(CLI::Range(2, 64));
  auto* v_word_opt = verify_cmd->add_option("--word", v_word, "braid word");
  auto* v_paper_flag = verify_cmd->add_flag("--paper", v_paper, "built-in kernel element for n = 5, 6");
  v_word_opt->excludes(v_paper_flag);
  verify_cmd->add_option("--artin-bound", v_bound, "maximum free-word length during expansion");
  verify_cmd->add_flag("--json", v_json, "machine-readable output");

  // search
  auto* search_cmd = app.add_subcommand("search", "Enumerate conjugators and certify kernel commutators");
  SearchConfig cfg;
  std::string s_filter = "commute";
  std::string s_core_a;
  std::string s_core_b;
  std::vector<std::string> s_seeds;
  bool s_paper_seeds = false;
  bool s_json = false;
  bool s_quiet = false;
  search_cmd->add_option("--n", cfg.n, "strand count")->required()->check(CLI::Range(3, 16));
  search_cmd->add_option("--max-len", cfg.max_conjugator_length, "maximum conjugator length")
      ->required()
      ->check(CLI::Range(0, 64));
  search_cmd->add_option("--filter", s_filter, "commute | pairing | none")
      ->check(CLI::IsMember({"commute", "pairing", "none"}));
  search_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1024));
  search_cmd->add_option("--checkpoint", cfg.checkpoint_path, "resume file");
  search_cmd->add_flag("--prune", cfg.prune_commuting,
                       "skip words with far-commuting letters out of index order");
  search_cmd->add_option("--core-a", s_core_a, "first core word (default s1)");
  search_cmd->add_option("--core-b", s_core_b, "second core word (default boundary twist)");
  search_cmd->add_option("--seed", s_seeds, "extra conjugator to examine (repeatable)");
  search_cmd->add_flag("--paper-seeds", s_paper_seeds,
                       "seed the conjugator equivalent to the built-in n = 5 element");
  search_cmd->add_flag("--json", s_json, "machine-readable output");
  search_cmd->add_flag("--quiet", s_quiet, "no progress on standard error");

  // svg
  auto* svg_cmd = app.add_subcommand("svg", "Draw the arcs of a fixture");
  std::string g_fixture;
  std::string g_out;
  std::string g_alpha = "alpha";
  std::string g_beta = "beta";
  bool g_plain = false;
  svg_cmd->add_option("--fixture", g_fixture, "fixture file or built-in name")->required();
  svg_cmd->add_option("--out", g_out, "output path")->required();
  svg_cmd->add_option("--alpha", g_alpha, "arc drawn thick; crossings with --beta are labelled");
  svg_cmd->add_option("--beta", g_beta, "second arc");
  svg_cmd->add_flag("--plain", g_plain, "omit crossing labels");

  // fixture
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in fixture");
  std::string f_name;
  fixture_cmd->add_option("name", f_name, "fig3 | fig5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    const auto active = app.get_subcommands();
    std::cerr << '\n' << (active.empty() ? app.help() : active.front()->help());
    return kExitUsage;
  }

  try {
    if (burau_cmd->parsed()) {
      if (!b_paper && b_word_opt->count() == 0) throw UsageError("burau needs --word or --paper");
      const BraidWord w = resolve_word(b_n, b_word, b_paper ? std::optional<int>(b_n) : std::nullopt);
      const Variant variant = b_variant == "reduced" ? Variant::reduced : Variant::unreduced;
      const BurauMatrix m = burau_image(w, variant);
      if (b_json) {
        json out{{"n", b_n}, {"word", w.to_string()}, {"matrix", report::matrix_json(m)}};
        if (b_at_one) {
          json rows = json::array();
          for (const auto& row : m.specialize_t1()) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(r);
          }
          out["at_one"] = rows;
        }
        std::cout << out.dump(2) << '\n';
      } else {
        print_matrix_text(m);
        if (b_at_one) {
          std::cout << "\nt = 1:\n";
          for (const auto& row : m.specialize_t1()) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
            std::cout << '\n';
          }
        }
      }
      return 0;
    }

    if (pairing_cmd->parsed()) {
      const ArcFixture fx = resolve_fixture(p_fixture);
      const PolylineArc& alpha = fx.arc(p_alpha);
      const PolylineArc& beta = fx.arc(p_beta);
      const CrossingList list = crossings(fx.model, alpha, beta);
      const LaurentPoly value = crossing_sum(list);
      const RemarkReport remark = remark_check(fx.model, alpha, beta, list);
      if (!p_svg.empty()) export_svg(fx.model, fx.arcs, annotate(list), p_svg, p_alpha);
      if (p_json) {
        json out{{"alpha", p_alpha},
                 {"beta", p_beta},
                 {"pairing", report::poly_json(value)},
                 {"crossings", list.size()},
                 {"remark", report::remark_json(remark)}};
        if (p_show) out["crossing_list"] = report::crossings_json(list);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << value.to_string() << '\n' << "crossings: " << list.size() << '\n';
        std::cout << "exponent rule: " << (remark.ok ? "holds" : "FAILS") << " on "
                  << remark.checked << " consecutive pairs";
        if (remark.skipped) std::cout << " (" << remark.skipped << " skipped)";
        std::cout << '\n';
        if (p_show) {
          for (std::size_t k = 0; k < list.size(); ++k) {
            const auto& c = list.items[k];
            std::cout << std::setw(3) << k + 1 << "  " << (c.sign > 0 ? '+' : '-') << "t^"
                      << c.exponent << "  at (" << format_rational(c.point.x) << ", "
                      << format_rational(c.point.y) << ")\n";
          }
        }
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (!v_paper && v_word_opt->count() == 0) {
        throw UsageError("verify-kernel needs --word or --paper");
      }
      if (v_paper && v_n != 5 && v_n != 6) throw UsageError("--paper is available for --n 5 and 6");
      const BraidWord w = v_paper ? paper_kernel_element(v_n) : parse_word(v_word, v_n);
      const KernelReport r = verify_kernel(w, v_bound);
      if (v_json) {
        json out = report::kernel_json(r);
        if (v_paper) out["naive_letter_count"] = paper_kernel_naive_length(v_n);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << report::kernel_text(r);
        if (v_paper) {
          std::cout << std::left << std::setw(18) << "naive_letters"
                    << paper_kernel_naive_length(v_n) << '\n';
        }
      }
      return r.certified() ? 0 : kExitNegative;
    }

    if (search_cmd->parsed()) {
      cfg.filter = parse_filter(s_filter);
      if (!s_core_a.empty()) cfg.core_a = parse_word(s_core_a, cfg.n);
      if (!s_core_b.empty()) cfg.core_b = parse_word(s_core_b, cfg.n);
      for (const auto& s : s_seeds) cfg.seeds.push_back(parse_word(s, cfg.n));
      if (s_paper_seeds) {
        if (cfg.n != 5) throw UsageError("--paper-seeds requires --n 5");
        cfg.seeds.push_back(search_seed_for_paper_element());
      }
      if (!s_quiet) {
        cfg.progress = [last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
          const std::size_t pct = 100 * done / total;
          if (pct / 10 != last / 10 || done == total) {
            std::cerr << "search: " << done << "/" << total << " tasks (" << pct << "%)\n";
            last = pct;
          }
        };
      }
      const SearchResult r = run_search(cfg);
      if (s_json) {
        std::cout << report::search_json(cfg, r).dump(2) << '\n';
      } else {
        std::cout << report::search_text(cfg, r);
      }
      return r.undecided.empty() ? 0 : kExitUndecided;
    }

    if (svg_cmd->parsed()) {
      const ArcFixture fx = resolve_fixture(g_fixture);
      std::vector<SvgAnnotation> notes;
      if (!g_plain && fx.arcs.size() >= 2) {
        notes = annotate(crossings(fx.model, fx.arc(g_alpha), fx.arc(g_beta)));
      }
      export_svg(fx.model, fx.arcs, notes, g_out, g_alpha);
      std::cout << "wrote " << g_out << '\n';
      return 0;
    }

    if (fixture_cmd->parsed()) {
      const auto text = fixtures::builtin(f_name);
      if (!text) throw UsageError("no built-in fixture '" + f_name + "' (fig3, fig5)");
      std::cout << *text;
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const auto active = app.get_subcommands();
    std::cerr << (active.empty() ? app.help() : active.front()->help());
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << "invalid geometry: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArtinUndecided& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
