#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tablut/enumeration.hpp"
#include "tablut/oracle/naive_movegen.hpp"
#include "tablut/rules.hpp"
#include "tablut/tbn.hpp"

namespace tablut::cli {

namespace {

using counting::BoundsReport;

constexpr int kMaxVerifyPerftDepth = 4;

struct LiteratureRow {
  const char* game;
  const char* bound;
  const char* solved;
};

// Published upper bounds for comparison; reference data, not computed here.
constexpr LiteratureRow kLiterature[] = {
    {"Tablut", "1.4e27", "no"},
    {"Nine Men's Morris", "3e11", "strong"},
    {"English Draughts", "5e20", "weak"},
    {"International Draughts", "1e30", "no"},
    {"Othello", "1e28", "no"},
    {"Chess", "1e43, 1e50", "no"},
    {"Go", "2e170", "no"},
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

std::string join_coords(const std::vector<Coord>& cells) {
  std::vector<std::string> parts;
  for (Coord c : cells) parts.push_back(to_string(c));
  return join(parts, ",");
}

std::string render_text(const BoundsReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "term" << std::setw(44) << "exact" << std::setw(10) << "display"
     << std::setw(10) << "published"
     << "status\n";
  for (const auto& e : report.entries) {
    os << std::setw(18) << counting::name(e.term) << std::setw(44) << e.exact.str() << std::setw(10) << e.display
       << std::setw(10) << e.published.text() << (e.matches_published ? "match" : "MISMATCH") << "\n";
  }
  os << "\nPublished state-space upper bounds (literature reference values):\n";
  os << std::setw(26) << "game" << std::setw(14) << "upper bound"
     << "solved\n";
  for (const auto& row : kLiterature) os << std::setw(26) << row.game << std::setw(14) << row.bound << row.solved << "\n";
  return os.str();
}

std::string render_json(const BoundsReport& report) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& e : report.entries) {
    terms[std::string(counting::name(e.term))] = {
        {"exact", e.exact.str()},
        {"display", e.display},
        {"published", e.published.text()},
        {"matches_published", e.matches_published},
    };
  }
  nlohmann::ordered_json literature = nlohmann::ordered_json::array();
  for (const auto& row : kLiterature)
    literature.push_back({{"game", row.game}, {"upper_bound", row.bound}, {"solved", row.solved}});
  nlohmann::ordered_json doc = {{"terms", terms}, {"literature", literature}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const BoundsReport& report) {
  std::ostringstream os;
  os << "term,exact,display,published,matches_published\n";
  for (const auto& e : report.entries)
    os << counting::name(e.term) << ',' << e.exact.str() << ',' << e.display << ',' << e.published.text() << ','
       << (e.matches_published ? "true" : "false") << "\n";
  return os.str();
}

int cmd_legal(const std::string& tbn, std::ostream& out) {
  const Position p = parse_tbn(tbn);
  for (const Move& m : legal_moves(p)) out << to_string(m) << "\n";
  return kOk;
}

int cmd_apply(const std::string& tbn, const std::string& move_text, std::ostream& out) {
  const Position p = parse_tbn(tbn);
  const Move m = parse_move(move_text);
  const MoveResult r = apply_move(p, m);
  out << "position: " << format_tbn(r.next) << "\n";
  out << "captures: " << join_coords(r.captured) << "\n";
  out << "outcome: " << to_string(r.outcome) << "\n";
  return kOk;
}

int cmd_playout(const std::string& tbn, std::uint64_t seed, std::size_t max_plies, std::ostream& out) {
  const Position p = parse_tbn(tbn);
  const auto trace = enumeration::random_playout(p, seed, max_plies);
  std::vector<std::string> moves;
  std::size_t captures = 0;
  for (const auto& step : trace.steps) {
    moves.push_back(to_string(step.move));
    captures += step.captured.size();
  }
  out << "seed: " << seed << "\n";
  out << "plies: " << trace.steps.size() << "\n";
  out << "captures: " << captures << "\n";
  out << "outcome: " << to_string(trace.final_outcome()) << "\n";
  out << "final: " << format_tbn(trace.steps.empty() ? trace.start : trace.steps.back().position) << "\n";
  out << "moves: " << join(moves, " ") << "\n";
  return kOk;
}

int cmd_verify_geometry(std::ostream& out) {
  const auto g = enumeration::derive_geometry();
  struct Row {
    const char* name;
    int derived;
    int expected;
  };
  const Row rows[] = {
      {"king_cells_total", g.king_cells_total, 45},
      {"king_cells_non_castle", g.king_cells_non_castle, 44},
      {"castle_adjacent_cells", g.castle_adjacent_cells, 4},
      {"camp_adjacent_king_cells", g.camp_adjacent_king_cells, 12},
      {"camp_capture_configs", g.camp_capture_configs, 20},
      {"ordinary_capture_cells", g.ordinary_capture_cells, 28},
      {"ordinary_capture_configs", g.ordinary_capture_configs, 56},
      {"escape_cells", g.escape_cells, 16},
  };
  int passed = 0;
  out << std::left << std::setw(28) << "quantity" << std::setw(10) << "derived" << std::setw(10) << "expected"
      << "status\n";
  for (const Row& r : rows) {
    const bool ok = r.derived == r.expected;
    passed += ok;
    out << std::setw(28) << r.name << std::setw(10) << r.derived << std::setw(10) << r.expected
        << (ok ? "PASS" : "FAIL") << "\n";
  }
  out << passed << "/" << std::size(rows) << " PASS\n";
  return passed == static_cast<int>(std::size(rows)) ? kOk : kVerificationFailed;
}

int cmd_verify_placements(std::size_t max_region, std::ostream& out) {
  if (max_region > enumeration::kMaxPlacementRegion)
    throw enumeration::EnumerationError("--max-region " + std::to_string(max_region) + " exceeds the cap of " +
                                        std::to_string(enumeration::kMaxPlacementRegion));
  std::vector<Coord> cells;
  for (int i = 0; i < static_cast<int>(max_region); ++i) cells.push_back(Coord::from_index(i));
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= max_region; ++n) {
    const std::span<const Coord> region(cells.data(), n);
    std::size_t region_cases = 0;
    std::size_t region_failures = 0;
    for (unsigned b = 0; b <= n; ++b) {
      for (unsigned w = 0; b + w <= n; ++w) {
        const auto enumerated = enumeration::enumerate_placements(region, b, w);
        const auto formula =
            counting::multinomial(static_cast<unsigned>(n), {b, w, static_cast<unsigned>(n) - b - w});
        ++region_cases;
        if (enumerated != formula) {
          ++region_failures;
          out << "  mismatch n=" << n << " b=" << b << " w=" << w << ": enumerated " << enumerated
              << ", multinomial " << formula << "\n";
        }
      }
    }
    out << "region " << std::setw(2) << n << ": " << region_cases << " cases, "
        << (region_failures == 0 ? "PASS" : "FAIL") << "\n";
    cases += region_cases;
    failures += region_failures;
  }
  out << cases - failures << "/" << cases << " PASS\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_verify_perft(int depth, std::ostream& out) {
  if (depth < 1 || depth > kMaxVerifyPerftDepth)
    throw enumeration::EnumerationError("--depth must be in 1.." + std::to_string(kMaxVerifyPerftDepth));
  const Position p = initial_position();
  const unsigned workers = std::max(2U, std::thread::hardware_concurrency());
  bool ok = true;
  out << std::left << std::setw(7) << "depth" << std::setw(14) << "engine" << std::setw(14) << "engine(mt)"
      << std::setw(14) << "naive" << std::setw(14) << "nodes/s"
      << "status\n";
  for (int d = 1; d <= depth; ++d) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto engine = enumeration::perft(p, d, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto threaded = enumeration::perft(p, d, workers);
    const auto naive = oracle::naive_perft(p, d);
    const bool row_ok = engine == naive && engine == threaded;
    ok = ok && row_ok;
    const auto rate = secs > 0 ? static_cast<std::uint64_t>(static_cast<double>(engine) / secs) : 0;
    out << std::setw(7) << d << std::setw(14) << engine << std::setw(14) << threaded << std::setw(14) << naive
        << std::setw(14) << rate << (row_ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

std::string render_bounds(const BoundsReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Text: break;
  }
  return render_text(report);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tablut rules engine and state-space bound calculator", "tablut"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* bounds = app.add_subcommand("bounds", "Print every state-space bound term");
  bounds->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<std::string> legal_args;
  auto* legal = app.add_subcommand("legal", "List legal moves of a TBN position");
  legal->add_option("tbn", legal_args, "Position in TBN")->required();

  std::vector<std::string> apply_args;
  auto* apply = app.add_subcommand("apply", "Apply a move such as h3-e3 to a TBN position");
  apply->add_option("args", apply_args, "<tbn> <move>")->required()->expected(2, -1);

  std::vector<std::string> playout_args;
  std::uint64_t seed = 0;
  std::size_t max_plies = 500;
  auto* playout = app.add_subcommand("playout", "Play uniformly random legal moves");
  playout->add_option("tbn", playout_args, "Position in TBN")->required();
  playout->add_option("--seed", seed, "Random seed")->required();
  playout->add_option("--max-plies", max_plies, "Stop after this many plies");

  auto* verify = app.add_subcommand("verify", "Run an oracle check");
  verify->require_subcommand(1);
  auto* geometry = verify->add_subcommand("geometry", "Derive the board constants used by the bounds");
  std::size_t max_region = 12;
  auto* placements = verify->add_subcommand("placements", "Enumerated placements vs multinomial");
  placements->add_option("--max-region", max_region, "Largest region size");
  int depth = 3;
  auto* perft = verify->add_subcommand("perft", "Engine vs naive move generator perft");
  perft->add_option("--depth", depth, "Deepest ply");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    if (*bounds) {
      const auto fmt = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
      out << render_bounds(counting::bounds_report(), fmt);
      return kOk;
    }
    if (*legal) return cmd_legal(join(legal_args, " "), out);
    if (*apply) {
      const std::string move = apply_args.back();
      apply_args.pop_back();
      return cmd_apply(join(apply_args, " "), move, out);
    }
    if (*playout) return cmd_playout(join(playout_args, " "), seed, max_plies, out);
    if (*geometry) return cmd_verify_geometry(out);
    if (*placements) return cmd_verify_placements(max_region, out);
    if (*perft) return cmd_verify_perft(depth, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace tablut::cli
