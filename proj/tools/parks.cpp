#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "parks/board.hpp"
#include "parks/enumerate.hpp"
#include "parks/errors.hpp"
#include "parks/reduce.hpp"
#include "parks/sequences.hpp"
#include "parks/solve.hpp"
#include "parks/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::invalid_argument("failed writing " + path);
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument(std::string(what) + " must look like A,B");
  }
  auto parse_int = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + " has a bad number '" + part + "'");
    }
    if (used != part.size() || part.empty()) {
      throw std::invalid_argument(std::string(what) + " has a bad number '" + part + "'");
    }
    return value;
  };
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

std::optional<std::chrono::milliseconds> deadline_from_secs(double secs) {
  if (secs <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
}

ordered_json cert_json(const parks::Certificate& cert) {
  ordered_json trees = ordered_json::array();
  for (const parks::Cell& cell : cert.trees) trees.push_back({cell.row, cell.col});
  return trees;
}

void emit_json(const std::string& command, const ordered_json& params,
               const ordered_json& result, const ordered_json& stats) {
  ordered_json envelope;
  envelope["command"] = command;
  envelope["params"] = params;
  envelope["result"] = result;
  envelope["stats"] = stats;
  std::cout << envelope.dump(2) << '\n';
}

void print_certificates(const std::vector<parks::Certificate>& certs) {
  bool first = true;
  for (const parks::Certificate& cert : certs) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << parks::serialize_certificate(cert);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parks puzzle toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a {command, params, result, stats} envelope");

  auto* cmd_verify = app.add_subcommand("verify", "check a certificate against a puzzle");
  cmd_verify->fallthrough();
  std::string verify_puzzle_path;
  std::string verify_cert_path;
  cmd_verify->add_option("puzzle", verify_puzzle_path, "puzzle file")->required();
  cmd_verify->add_option("certificate", verify_cert_path, "certificate file")->required();

  auto* cmd_solve = app.add_subcommand("solve", "search for solutions of a puzzle");
  cmd_solve->fallthrough();
  std::string solve_puzzle_path;
  bool solve_count = false;
  std::uint64_t solve_cap = 2;
  double solve_timeout = 0;
  cmd_solve->add_option("puzzle", solve_puzzle_path, "puzzle file")->required();
  cmd_solve->add_flag("--count", solve_count, "print the exact number of solutions");
  cmd_solve->add_option("--cap", solve_cap, "stop after this many solutions (0 = all)");
  cmd_solve->add_option("--timeout", solve_timeout, "give up after this many seconds");

  auto* cmd_reduce = app.add_subcommand("reduce", "embed a 3CNF formula into a puzzle");
  cmd_reduce->fallthrough();
  std::string reduce_cnf_path;
  std::string reduce_quota;
  std::string reduce_out_path;
  std::string reduce_map_path;
  cmd_reduce->add_option("cnf", reduce_cnf_path, "DIMACS CNF file")->required();
  cmd_reduce->add_option("--quota", reduce_quota, "tree quota as c,r")->required();
  cmd_reduce->add_option("-o,--output", reduce_out_path, "puzzle file to write")->required();
  cmd_reduce->add_option("--map", reduce_map_path, "also write the occurrence map here");

  auto* cmd_count = app.add_subcommand("count-configs",
                                       "count tree configurations on a bare board");
  cmd_count->fallthrough();
  std::string count_quota;
  std::string count_dims;
  bool count_list = false;
  double count_timeout = 0;
  cmd_count->add_option("--quota", count_quota, "tree quota as c,r")->required();
  cmd_count->add_option("--dims", count_dims, "board size as m,n")->required();
  cmd_count->add_flag("--list", count_list, "print the configurations instead");
  cmd_count->add_option("--timeout", count_timeout, "give up after this many seconds");

  auto* cmd_shuriken = app.add_subcommand("shuriken",
                                          "print one of the two minimal-board configurations");
  cmd_shuriken->fallthrough();
  std::string shuriken_quota;
  std::string shuriken_side;
  cmd_shuriken->add_option("--quota", shuriken_quota, "tree quota as c,r")->required();
  cmd_shuriken->add_option("--side", shuriken_side, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));

  auto* cmd_sequence = app.add_subcommand("sequence", "evaluate a named integer sequence");
  cmd_sequence->fallthrough();
  std::string sequence_id;
  unsigned sequence_n = 0;
  std::string sequence_method = "recurrence";
  cmd_sequence->add_option("id", sequence_id, "sequence name")
      ->required()
      ->check(CLI::IsMember({"a002464"}));
  cmd_sequence->add_option("--n", sequence_n, "index to evaluate")->required();
  cmd_sequence->add_option("--method", sequence_method, "how to compute it")
      ->check(CLI::IsMember({"recurrence", "explicit", "enumerate"}));

  auto* cmd_census = app.add_subcommand("census", "count 4x4 one-tree puzzles");
  cmd_census->fallthrough();
  std::string census_mode;
  cmd_census->add_option("--mode", census_mode, "contiguous or analytic")
      ->required()
      ->check(CLI::IsMember({"contiguous", "analytic"}));

  auto* cmd_stirling = app.add_subcommand("stirling2",
                                          "Stirling number of the second kind");
  cmd_stirling->fallthrough();
  unsigned stirling_n = 0;
  unsigned stirling_k = 0;
  cmd_stirling->add_option("n", stirling_n, "set size")->required();
  cmd_stirling->add_option("k", stirling_k, "number of blocks")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_verify) {
      parks::Puzzle puzzle = parks::parse_puzzle(read_file(verify_puzzle_path));
      parks::Certificate cert = parks::parse_certificate(read_file(verify_cert_path));
      parks::Verdict verdict = parks::verify(puzzle, cert);
      if (as_json) {
        ordered_json params;
        params["puzzle"] = verify_puzzle_path;
        params["certificate"] = verify_cert_path;
        ordered_json result;
        result["valid"] = verdict.valid;
        ordered_json lines = ordered_json::array();
        for (const parks::Violation& v : verdict.violations) {
          lines.push_back(parks::violation_to_string(v));
        }
        result["violations"] = lines;
        emit_json("verify", params, result, ordered_json::object());
      } else if (verdict.valid) {
        std::cout << "valid\n";
      } else {
        for (const parks::Violation& v : verdict.violations) {
          std::cout << parks::violation_to_string(v) << '\n';
        }
      }
      return verdict.valid ? 0 : 1;
    }

    if (*cmd_solve) {
      parks::Puzzle puzzle = parks::parse_puzzle(read_file(solve_puzzle_path));
      auto deadline = deadline_from_secs(solve_timeout);
      ordered_json params;
      params["puzzle"] = solve_puzzle_path;
      params["count"] = solve_count;
      params["cap"] = solve_cap;
      params["timeout"] = solve_timeout;
      if (solve_count) {
        mpz_class total = parks::count_solutions(puzzle, deadline);
        if (as_json) {
          ordered_json result;
          result["count"] = total.get_str();
          emit_json("solve", params, result, ordered_json::object());
        } else {
          std::cout << total.get_str() << '\n';
        }
        return total == 0 ? 1 : 0;
      }
      parks::SolveOptions opts;
      opts.cap = solve_cap;
      opts.deadline = deadline;
      parks::SolveResult res = parks::solve(puzzle, opts);
      bool capped = solve_cap != 0 && res.solutions.size() >= solve_cap;
      if (as_json) {
        ordered_json result;
        ordered_json sols = ordered_json::array();
        for (const parks::Certificate& cert : res.solutions) sols.push_back(cert_json(cert));
        result["solutions"] = sols;
        result["complete"] = res.complete;
        ordered_json stats;
        stats["nodes_expanded"] = res.stats.nodes_expanded;
        stats["propagation_steps"] = res.stats.propagation_steps;
        stats["solutions_found"] = res.stats.solutions_found;
        stats["max_depth"] = res.stats.max_depth;
        emit_json("solve", params, result, stats);
      } else {
        print_certificates(res.solutions);
      }
      if (!res.complete && !capped) return 3;
      return res.solutions.empty() ? 1 : 0;
    }

    if (*cmd_reduce) {
      auto [c, r] = parse_pair(reduce_quota, "--quota");
      parks::CnfFormula phi = parks::parse_dimacs(read_file(reduce_cnf_path));
      parks::Reduction reduction = parks::reduce(phi, parks::Quota{c, r});
      write_file(reduce_out_path, parks::serialize_puzzle(reduction.puzzle));
      if (!reduce_map_path.empty()) {
        write_file(reduce_map_path, parks::serialize_map(reduction.map));
      }
      if (as_json) {
        ordered_json params;
        params["cnf"] = reduce_cnf_path;
        params["quota"] = reduce_quota;
        params["output"] = reduce_out_path;
        params["map"] = reduce_map_path.empty() ? ordered_json(nullptr)
                                                : ordered_json(reduce_map_path);
        ordered_json result;
        result["dims"] = {reduction.puzzle.dims.m, reduction.puzzle.dims.n};
        result["vars"] = reduction.map.formula.num_vars;
        result["clauses"] = reduction.map.formula.clauses.size();
        result["original_clauses"] = reduction.map.original_clauses;
        emit_json("reduce", params, result, ordered_json::object());
      }
      return 0;
    }

    if (*cmd_count) {
      auto [c, r] = parse_pair(count_quota, "--quota");
      auto [m, n] = parse_pair(count_dims, "--dims");
      parks::Quota quota{c, r};
      parks::BoardDims dims{m, n};
      ordered_json params;
      params["quota"] = count_quota;
      params["dims"] = count_dims;
      params["list"] = count_list;
      params["timeout"] = count_timeout;
      if (count_list) {
        std::vector<parks::Certificate> certs = parks::list_configs(quota, dims, 1000000);
        if (as_json) {
          ordered_json result;
          result["count"] = std::to_string(certs.size());
          ordered_json all = ordered_json::array();
          for (const parks::Certificate& cert : certs) all.push_back(cert_json(cert));
          result["certificates"] = all;
          emit_json("count-configs", params, result, ordered_json::object());
        } else {
          print_certificates(certs);
        }
        return 0;
      }
      parks::EnumerateOptions opts;
      opts.deadline = deadline_from_secs(count_timeout);
      mpz_class total = parks::count_configs(quota, dims, opts).count;
      if (as_json) {
        ordered_json result;
        result["count"] = total.get_str();
        emit_json("count-configs", params, result, ordered_json::object());
      } else {
        std::cout << total.get_str() << '\n';
      }
      return 0;
    }

    if (*cmd_shuriken) {
      auto [c, r] = parse_pair(shuriken_quota, "--quota");
      parks::Certificate cert = parks::shuriken(
          parks::Quota{c, r}, shuriken_side == "left" ? parks::ShurikenSide::Left
                                                      : parks::ShurikenSide::Right);
      if (as_json) {
        ordered_json params;
        params["quota"] = shuriken_quota;
        params["side"] = shuriken_side;
        ordered_json result;
        result["certificate"] = cert_json(cert);
        emit_json("shuriken", params, result, ordered_json::object());
      } else {
        std::cout << parks::serialize_certificate(cert);
      }
      return 0;
    }

    if (*cmd_sequence) {
      mpz_class value;
      if (sequence_method == "recurrence") {
        value = parks::a002464_recurrence(sequence_n);
      } else if (sequence_method == "explicit") {
        value = parks::a002464_explicit(sequence_n);
      } else {
        value = parks::count_configs(parks::Quota{1, 1},
                                     parks::BoardDims{static_cast<int>(sequence_n),
                                                      static_cast<int>(sequence_n)})
                    .count;
      }
      if (as_json) {
        ordered_json params;
        params["id"] = sequence_id;
        params["n"] = sequence_n;
        params["method"] = sequence_method;
        ordered_json result;
        result["value"] = value.get_str();
        emit_json("sequence", params, result, ordered_json::object());
      } else {
        std::cout << value.get_str() << '\n';
      }
      return 0;
    }

    if (*cmd_census) {
      parks::CensusReport report = census_mode == "analytic"
                                       ? parks::census_4x4_noncontiguous()
                                       : parks::census_4x4_contiguous();
      if (as_json) {
        ordered_json params;
        params["mode"] = census_mode;
        ordered_json result;
        if (census_mode == "analytic") {
          result["one_sided"] = report.noncontiguous_one_sided.get_str();
          result["unique_total"] = report.noncontiguous_unique_total.get_str();
          result["at_least_one"] = report.at_least_one_solution_total.get_str();
        } else {
          result["one_sided"] = report.contiguous_one_sided.get_str();
          result["unique_total"] = report.contiguous_unique_total.get_str();
        }
        emit_json("census", params, result, ordered_json::object());
      } else if (census_mode == "analytic") {
        std::cout << "one-sided " << report.noncontiguous_one_sided.get_str() << '\n'
                  << "unique-total " << report.noncontiguous_unique_total.get_str() << '\n'
                  << "at-least-one " << report.at_least_one_solution_total.get_str()
                  << '\n';
      } else {
        std::cout << "one-sided " << report.contiguous_one_sided.get_str() << '\n'
                  << "unique-total " << report.contiguous_unique_total.get_str() << '\n';
      }
      return 0;
    }

    if (*cmd_stirling) {
      mpz_class value = parks::stirling2(stirling_n, stirling_k);
      if (as_json) {
        ordered_json params;
        params["n"] = stirling_n;
        params["k"] = stirling_k;
        ordered_json result;
        result["value"] = value.get_str();
        emit_json("stirling2", params, result, ordered_json::object());
      } else {
        std::cout << value.get_str() << '\n';
      }
      return 0;
    }
  } catch (const parks::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const parks::DeadlineExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const parks::MemoryBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const parks::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
