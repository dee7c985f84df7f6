#pragma once

// Command-line front end. Exit codes: 0 success / pass, 1 verified failure
// or a negative answer (NotExists, exhausted_none), 2 usage or input error,
// 3 capacity or node budget exceeded.

#include <magrect/construct.hpp>
#include <magrect/designs.hpp>
#include <magrect/feasibility.hpp>
#include <magrect/json_io.hpp>
#include <magrect/search.hpp>
#include <magrect/verify.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace magrect::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kCapacity = 3 };

namespace detail {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void emit(const RectangleSet& set, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(set).dump() << '\n';
  } else {
    out << render_text(set);
  }
}

inline LoadedSet load(const std::string& path, std::istream& in, std::ostream& err) {
  auto loaded = deserialize(slurp(path, in));
  if (!loaded.cover.ok()) err << "warning: not an exact cover of D_" << loaded.set.group().value() << ":\n"
                              << describe(loaded.cover);
  return loaded;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magic rectangle sets over dihedral groups", "magrect"};
  app.require_subcommand(1);

  bool as_json = false;

  // construct
  std::string type;
  std::int64_t l_param = 0, m = 0, n = 0, k = 0;
  bool repair_plan = false;
  auto* construct = app.add_subcommand("construct", "Build one of the block constructions");
  construct->add_option("--type", type, "lmrs22 | lmrs | lsms | lms | ms")
      ->required()
      ->check(CLI::IsMember({"lmrs22", "lmrs", "lsms", "lms", "ms"}));
  construct->add_option("--l", l_param, "lmrs22: number of 2x2 blocks (group D_{2l})");
  construct->add_option("--m", m, "rows");
  construct->add_option("--n", n, "columns (square side for lsms, lms, ms)");
  construct->add_option("--k", k, "number of arrays");
  construct->add_flag("--repair-plan", repair_plan, "lsms/lms with n = 8k, k >= 2: search a valid diagonal plan");
  construct->add_flag("--json", as_json);

  // verify
  std::string mode = "linear", diag = "fixed", in_path;
  bool square = false, magic = false;
  std::size_t cap = kDefaultCap;
  auto* verify = app.add_subcommand("verify", "Check a set read from JSON");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"linear", "orderable"}));
  verify->add_flag("--square", square, "semi-magic square check (rho = sigma)");
  verify->add_flag("--magic", magic, "magic square check (diagonals too)");
  verify->add_option("--diag", diag)->check(CLI::IsMember({"fixed", "orderable"}));
  verify->add_option("--cap", cap, "longest line for orderable checks")->check(CLI::Range(std::size_t{1}, kMaxCap));
  verify->add_option("--in", in_path, "JSON file, or - for stdin")->required();
  verify->add_flag("--json", as_json);

  // feasible
  std::int64_t fm = 0, fn = 0, fk = 0;
  auto* feasible = app.add_subcommand("feasible", "Classify a parameter tuple");
  feasible->add_option("--m", fm)->required()->check(CLI::PositiveNumber);
  feasible->add_option("--n", fn)->required()->check(CLI::PositiveNumber);
  feasible->add_option("--k", fk)->required()->check(CLI::PositiveNumber);
  feasible->add_flag("--json", as_json);

  // search
  SearchConfig cfg;
  std::string search_mode = "linear";
  bool count = false, no_symmetry = false;
  auto* search = app.add_subcommand("search", "Exhaustive search at small order");
  search->add_option("--l", cfg.l)->required()->check(CLI::PositiveNumber);
  search->add_option("--m", cfg.m)->required()->check(CLI::PositiveNumber);
  search->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  search->add_option("--k", cfg.k)->required()->check(CLI::PositiveNumber);
  search->add_option("--mode", search_mode)->check(CLI::IsMember({"linear", "orderable"}));
  search->add_option("--budget", cfg.node_budget)->check(CLI::PositiveNumber);
  search->add_option("--cap", cfg.hard_cap, "largest group order searched")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  search->add_flag("--count", count);
  search->add_flag("--no-symmetry", no_symmetry);
  search->add_flag("--json", as_json);

  // concat
  std::string axis;
  auto* concat = app.add_subcommand("concat", "Join the k arrays into one rectangle");
  concat->add_option("--axis", axis, "cols: m x nk side by side; rows: mk x n stacked")
      ->required()
      ->check(CLI::IsMember({"rows", "cols"}));
  concat->add_option("--in", in_path)->required();
  concat->add_flag("--json", as_json);

  // render
  auto* render = app.add_subcommand("render", "Print a set as text grids");
  render->add_option("--in", in_path)->required();

  std::vector<std::string> argv_store{"magrect"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*construct) {
      auto need = [&](std::int64_t v, const char* flag) {
        if (v <= 0) throw detail::usage_error(std::string("construct --type ") + type + " needs " + flag);
        return static_cast<std::size_t>(v);
      };
      const auto policy = repair_plan ? PlanPolicy::repair : PlanPolicy::strict;
      if (type == "lmrs22") {
        detail::emit(lmrs_2_2(need(l_param, "--l")), as_json, out);
      } else if (type == "lmrs") {
        detail::emit(lmrs_even(need(m, "--m"), need(n, "--n"), need(k, "--k")), as_json, out);
      } else if (type == "lsms") {
        detail::emit(lsms(need(n, "--n"), policy), as_json, out);
      } else if (type == "ms") {
        detail::emit(ms(need(n, "--n")), as_json, out);
      } else {
        const auto side = need(n, "--n");
        if (side % 8) throw detail::usage_error("construct --type lms needs n = 0 mod 8");
        auto set = lsms(side, policy);
        const auto report = verify_magic_square(set, DiagonalMode::fixed, Mode::linear);
        detail::emit(set, as_json, out);
        if (!report.pass()) {
          err << render_text(report);
          return kNegative;
        }
      }
      return kOk;
    }

    if (*verify) {
      const auto loaded = detail::load(in_path, in, err);
      const auto row_mode = mode == "linear" ? Mode::linear : Mode::orderable;
      VerificationReport report;
      if (magic) {
        report = verify_magic_square(loaded.set, diag == "fixed" ? DiagonalMode::fixed : DiagonalMode::orderable,
                                     row_mode, cap);
      } else if (square) {
        report = verify_semi_magic_square(loaded.set, row_mode, cap);
      } else {
        report = row_mode == Mode::linear ? verify_linear(loaded.set) : verify_orderable(loaded.set, cap);
      }
      if (as_json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << render_text(report);
      }
      return report.pass() ? kOk : kNegative;
    }

    if (*feasible) {
      const auto v = classify(static_cast<std::uint64_t>(fm), static_cast<std::uint64_t>(fn),
                              static_cast<std::uint64_t>(fk));
      if (as_json) {
        auto j = to_json(v, static_cast<std::uint64_t>(fm), static_cast<std::uint64_t>(fn),
                         static_cast<std::uint64_t>(fk));
        if (v.status == Status::not_exists) j["witness"] = parity_witness(fm, fn, fk);
        out << j.dump() << '\n';
      } else {
        out << "(" << fm << ", " << fn << ", " << fk << ") over D_" << v.l << ": " << to_string(v.status)
            << " [" << to_string(v.justification) << "]\n"
            << v.detail << '\n';
        if (v.status == Status::not_exists) out << parity_witness(fm, fn, fk) << '\n';
      }
      return v.status == Status::not_exists ? kNegative : kOk;
    }

    if (*search) {
      cfg.mode = search_mode == "linear" ? Mode::linear : Mode::orderable;
      cfg.count_all = count;
      cfg.symmetry_reduction = !no_symmetry;
      const auto outcome = exhaustive_search(cfg);
      if (as_json) {
        out << to_json(outcome).dump() << '\n';
      } else {
        out << "result: " << to_string(outcome.result) << "\nnodes_visited: " << outcome.nodes_visited << '\n';
        if (outcome.solutions_count) out << "solutions: " << *outcome.solutions_count << '\n';
        if (outcome.set) out << '\n' << render_text(*outcome.set);
      }
      switch (outcome.result) {
        case SearchResult::found: return kOk;
        case SearchResult::exhausted_none: return kNegative;
        case SearchResult::budget_exceeded: return kCapacity;
      }
    }

    if (*concat) {
      const auto loaded = detail::load(in_path, in, err);
      detail::emit(axis == "cols" ? concat_horizontal(loaded.set) : concat_vertical(loaded.set), as_json, out);
      return kOk;
    }

    if (*render) {
      out << render_text(detail::load(in_path, in, err).set);
      return kOk;
    }
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace magrect::cli
