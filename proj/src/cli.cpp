#include "specialred/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "specialred/descriptor_io.hpp"
#include "specialred/errors.hpp"
#include "specialred/glattice.hpp"
#include "specialred/laurent_forms.hpp"
#include "specialred/reductive.hpp"

namespace specialred {

namespace {

namespace fs = std::filesystem;
using io::json;

constexpr int kExitError = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument looks like it, otherwise a file path.
std::string inline_or_file(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return arg;
  return read_file(arg);
}

std::string join(const IntVector& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

std::string element_set(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h.elements()[i]);
  }
  return s + "}";
}

std::string poly_to_string(const forms::LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      long e = it->first[k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(k + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += std::to_string(it->second);
    } else {
      s += (it->second == 1 ? "" : std::to_string(it->second) + "*") + mono;
    }
  }
  return s;
}

void print_witness(const Witness& w, std::ostream& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out << "witness: none\n";
        } else if constexpr (std::is_same_v<T, SectionWitness>) {
          out << "witness: equivariant section into a permutation lattice of "
                 "rank "
              << x.cover_rank << "\n  section " << x.section.to_string()
              << "\n";
        } else if constexpr (std::is_same_v<T, TorusObstructionWitness>) {
          if (x.obstruction) {
            out << "witness: torus obstruction (H = "
                << element_set(x.obstruction->subgroup) << " of order "
                << x.obstruction->subgroup.order() << ", "
                << x.obstruction->invariants.to_string() << ") on the "
                << x.obstruction_lattice << " lattice\n";
          } else {
            out << "witness: the section system has no integer solution\n";
          }
          if (x.certificate)
            out << "  certificate modulus " << x.certificate->modulus.get_str()
                << "\n";
        } else if constexpr (std::is_same_v<T, SaturationWitness>) {
          out << "witness: invariant factors of " << x.matrix.to_string()
              << " are [" << join(x.invariant_factors, ",") << "]\n";
        } else if constexpr (std::is_same_v<T, NonSaturationWitness>) {
          out << "witness: primitive c = (" << join(x.coefficients, ",")
              << ") with combination (" << join(x.combination, ",")
              << ") divisible by " << x.divisor.get_str() << "\n";
        } else {
          out << "witness: factor " << x.factor_index << ": " << x.reason
              << "\n";
        }
      },
      w);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Special:
      return 0;
    case Verdict::NotSpecial:
      return 1;
    case Verdict::Undecided:
      return 2;
  }
  return kExitError;
}

struct FileResult {
  int code = kExitError;
  std::string out;
  std::string err;
};

FileResult classify_file(const fs::path& path, bool as_json, bool explain,
                         const Limits& limits, bool show_name) {
  FileResult r;
  std::ostringstream out;
  try {
    const auto start = std::chrono::steady_clock::now();
    GroupDescriptor desc = io::parse_descriptor(read_file(path), limits);
    ClassificationReport report = classify(desc);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (as_json) {
      json j = io::report_to_json(report, ms, explain);
      if (show_name) j["file"] = path.string();
      out << j.dump() << "\n";
    } else {
      if (show_name) out << "file: " << path.string() << "\n";
      out << "verdict: " << to_string(report.verdict) << "\n"
          << "criterion: " << report.criterion << "\n";
      print_witness(report.witness, out);
      if (explain)
        for (const auto& n : report.notes) out << "note: " << n << "\n";
    }
    r.code = exit_code(report.verdict);
  } catch (const ParseError& e) {
    r.err = path.string() + ": parse error at " + e.what() + "\n";
  } catch (const ValidationError& e) {
    r.err = path.string() + ": invalid descriptor at " + e.path() + ": " +
            e.what() + "\n";
  } catch (const std::exception& e) {
    r.err = path.string() + ": error: " + e.what() + "\n";
  }
  r.out = out.str();
  return r;
}

int run_classify(const std::string& target, bool as_json, bool explain,
                 const Limits& limits, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(target, ec)) {
    FileResult r = classify_file(target, as_json, explain, limits, false);
    out << r.out;
    err << r.err;
    return r.code;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(target))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no .json descriptor files in " << target << "\n";
    return kExitError;
  }
  std::vector<std::future<FileResult>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, classify_file, f, as_json,
                              explain, limits, true));
  int code = 0;
  for (auto& job : jobs) {
    FileResult r = job.get();
    out << r.out;
    err << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

GLattice lattice_argument(const std::string& arg, const Limits& limits) {
  const std::string text = inline_or_file(arg);
  json j = io::parse_json(text);
  // A torus descriptor file works as a lattice argument too.
  if (j.is_object() && j.contains("kind")) {
    if (j["kind"] != "torus")
      throw ValidationError("/kind", "expected a torus or a bare lattice");
    j.erase("kind");
    j.erase("v");
  }
  if (j.is_object())
    for (const auto& [k, v] : j.items())
      if (k != "galois" && k != "rank" && k != "action")
        throw ValidationError("/" + k, "unknown field");
  return io::lattice_from_json(j, "", limits);
}

std::vector<Subgroup> subgroup_argument(const std::string& arg,
                                        const FiniteGroup& g) {
  if (arg.empty() || arg == "full") return {Subgroup::whole(g)};
  if (arg == "trivial") return {Subgroup::trivial(g)};
  if (arg == "all") return subgroups(g);
  if (std::all_of(arg.begin(), arg.end(), ::isdigit)) {
    auto all = subgroups(g);
    std::size_t i = std::stoul(arg);
    if (i >= all.size())
      throw Error("subgroup index " + arg + " out of range (there are " +
                  std::to_string(all.size()) + " subgroups)");
    return {all[i]};
  }
  json j = io::parse_json(arg);
  if (!j.is_array()) throw ValidationError("/", "subgroup must be full, "
                                                "trivial, all, an index or a "
                                                "list of element indices");
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<std::size_t>() >= g.order())
      throw ValidationError("/" + std::to_string(i),
                            "expected an element index below " +
                                std::to_string(g.order()));
    gens.push_back(j[i].get<std::size_t>());
  }
  return {Subgroup::generated_by(g, gens)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Decide whether reductive groups given by descriptors are "
               "special.",
               "specialred"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::uint64_t seed = forms::SearchOptions{}.seed;
  Limits limits;
  app.add_option("--seed", seed, "Seed for randomized searches");
  app.add_option("--max-group-order", limits.max_group_order,
                 "Largest Galois group accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-rank", limits.max_rank, "Largest lattice rank accepted")
      ->check(CLI::NonNegativeNumber);

  bool as_json = false, explain = false;
  std::string target;
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a descriptor file or directory");
  classify_cmd->add_option("path", target, "Descriptor file or directory")
      ->required();
  classify_cmd->add_flag("--json", as_json, "Machine-readable report");
  classify_cmd->add_flag("--explain", explain, "Include intermediate notes");

  std::string matrix_arg;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix");
  snf_cmd->add_option("matrix", matrix_arg, "JSON matrix, e.g. [[2,4],[6,8]]")
      ->required();
  snf_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string lattice_arg, subgroup_arg;
  auto* h1_cmd = app.add_subcommand("h1", "First cohomology of a lattice");
  h1_cmd->add_option("lattice", lattice_arg, "Lattice file or inline JSON")
      ->required();
  h1_cmd->add_option("subgroup", subgroup_arg,
                     "full (default), trivial, all, an index into the "
                     "subgroup list, or a JSON list of generating elements");
  h1_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* inv_cmd =
      app.add_subcommand("invertible", "Test a lattice for invertibility");
  inv_cmd->add_option("lattice", lattice_arg, "Lattice file or inline JSON")
      ->required();
  inv_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string spec_arg;
  forms::SearchOptions search;
  auto* forms_cmd = app.add_subcommand("forms", "Diagonal Laurent forms");
  forms_cmd->require_subcommand(1);
  auto* check_cmd = forms_cmd->add_subcommand(
      "check", "Parity criterion and isotropy search for a diagonal form");
  check_cmd->add_option("spec", spec_arg, "Form spec file or inline JSON")
      ->required();
  check_cmd->add_option("--degree-bound", search.degree_bound,
                        "Largest total degree of search entries");
  check_cmd->add_option("--trials", search.trials, "Random search trials");
  check_cmd->add_flag("--json", as_json, "Machine-readable output");

  for (auto* sub : {classify_cmd, snf_cmd, h1_cmd, inv_cmd, check_cmd})
    sub->fallthrough();
  forms_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*classify_cmd)
      return run_classify(target, as_json, explain, limits, out, err);

    if (*snf_cmd) {
      IntMatrix a = io::matrix_from_json(io::parse_json(matrix_arg), "");
      SmithDecomposition d = snf(a);
      if (as_json) {
        out << json{{"invariant_factors", io::vector_to_json(d.invariant_factors)},
                    {"left", io::matrix_to_json(d.left)},
                    {"diag", io::matrix_to_json(d.diag)},
                    {"right", io::matrix_to_json(d.right)}}
                   .dump()
            << "\n";
      } else {
        out << "invariant factors: " << join(d.invariant_factors) << "\n"
            << "U = " << d.left.to_string() << "\n"
            << "S = " << d.diag.to_string() << "\n"
            << "V = " << d.right.to_string() << "\n";
      }
      return 0;
    }

    if (*h1_cmd) {
      GLattice m = lattice_argument(lattice_arg, limits);
      json rows = json::array();
      for (const Subgroup& h : subgroup_argument(subgroup_arg, m.group())) {
        AbelianInvariants inv = h1(h, m);
        if (as_json) {
          rows.push_back({{"subgroup", io::subgroup_to_json(h)},
                          {"h1", io::invariants_to_json(inv)}});
        } else {
          out << "H = " << element_set(h) << " (order " << h.order()
              << "): " << inv.to_string() << "\n";
        }
      }
      if (as_json) out << rows.dump() << "\n";
      return 0;
    }

    if (*inv_cmd) {
      GLattice m = lattice_argument(lattice_arg, limits);
      InvertibilityResult r = is_invertible(m);
      if (as_json) {
        json j{{"invertible", r.invertible},
               {"cover_rank", r.cover.cover_lattice.rank()}};
        if (r.section) j["section"] = io::matrix_to_json(*r.section);
        if (r.certificate)
          j["certificate"] = {
              {"multiplier", io::vector_to_json(r.certificate->multiplier)},
              {"modulus", io::integer_to_json(r.certificate->modulus)}};
        out << j.dump() << "\n";
      } else {
        out << "invertible: " << (r.invertible ? "true" : "false") << "\n"
            << "cover rank: " << r.cover.cover_lattice.rank() << "\n";
        if (r.section) out << "section: " << r.section->to_string() << "\n";
        if (r.certificate)
          out << "certificate modulus: " << r.certificate->modulus.get_str()
              << "\n";
      }
      return 0;
    }

    if (*check_cmd) {
      forms::DiagonalFormSpec spec =
          io::form_spec_from_json(io::parse_json(inline_or_file(spec_arg)));
      search.seed = seed;
      const bool certified =
          forms::anisotropy_criterion(spec) == forms::Anisotropy::Certified;
      auto found = forms::isotropy_search(spec, search);
      if (as_json) {
        json j{{"criterion", certified ? "certified" : "inapplicable"}};
        if (found) {
          json w = json::array();
          for (const auto& p : *found) w.push_back(poly_to_string(p));
          j["witness"] = w;
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump() << "\n";
      } else {
        out << "criterion: "
            << (certified ? "certified anisotropic (exponents distinct mod 2)"
                          : "inapplicable (exponents collide mod 2)")
            << "\n";
        if (found) {
          out << "isotropic vector:";
          for (const auto& p : *found) out << " (" << poly_to_string(p) << ")";
          out << "\n";
        } else {
          out << "isotropy search: none found (degree bound "
              << search.degree_bound << ", " << search.trials << " trials)\n";
        }
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "invalid input at " << e.path() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace specialred
