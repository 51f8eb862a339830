#include "specialred/descriptor_io.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>

#include "specialred/errors.hpp"

namespace specialred::io {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw ValidationError(path.empty() ? "/" : path, msg);
}

// Library errors raised while building an object become validation errors
// located at `path`.
template <typename F>
auto at_path(const std::string& path, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_object(const json& j, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!j.is_object()) invalid(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* a) { return key == a; });
    if (!ok) invalid(path + "/" + key, "unknown field");
  }
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool digits = s.size() > start &&
                  std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start),
                              s.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
      invalid(path, "expected an integer");
    return v;
  }
  invalid(path, "expected an integer");
}

long small_int(const json& j, const std::string& path, long lo, long hi) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
    invalid(path, "must be at most " + std::to_string(hi));
  const auto v = j.get<std::int64_t>();
  if (v < lo || v > hi)
    invalid(path, "must be between " + std::to_string(lo) + " and " +
                      std::to_string(hi));
  return static_cast<long>(v);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

constexpr long kMaxParam = 1'000'000'000L;

FactorDescriptor factor_from_json(const json& j, const std::string& path) {
  expect_object(j, path, {"type", "n", "d", "ext"});
  const json& type = field(j, "type", path);
  if (!type.is_string()) invalid(path + "/type", "expected \"SL1\" or \"Sp\"");
  FactorDescriptor f;
  const auto& t = type.get_ref<const std::string&>();
  if (t == "SL1") {
    f.kind = FactorKind::SL1;
  } else if (t == "Sp") {
    f.kind = FactorKind::Sp;
  } else {
    invalid(path + "/type", "expected \"SL1\" or \"Sp\", got \"" + t + "\"");
  }
  f.n = small_int(field(j, "n", path), path + "/n", 1, kMaxParam);
  f.index_d = j.contains("d") ? small_int(j["d"], path + "/d", 1, kMaxParam) : 1;
  f.extension_degree =
      j.contains("ext") ? small_int(j["ext"], path + "/ext", 1, kMaxParam) : 1;
  return f;
}

std::vector<FactorDescriptor> factors_from_json(const json& j,
                                                const std::string& path) {
  expect_array(j, path);
  std::vector<FactorDescriptor> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(factor_from_json(j[i], path + "/" + std::to_string(i)));
  at_path(path, [&] {
    validate_derived_shape(out);
    return 0;
  });
  return out;
}

json factor_to_json(const FactorDescriptor& f) {
  json j{{"type", f.kind == FactorKind::SL1 ? "SL1" : "Sp"},
         {"n", f.n},
         {"ext", f.extension_degree}};
  if (f.kind == FactorKind::SL1) j["d"] = f.index_d;
  return j;
}

json factors_to_json(const std::vector<FactorDescriptor>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(factor_to_json(f));
  return arr;
}

TorusDescriptor torus_from_json(const json& j, const std::string& path,
                                const Limits& limits,
                                std::initializer_list<const char*> extra) {
  std::vector<const char*> allowed{"galois", "rank", "action"};
  allowed.insert(allowed.end(), extra.begin(), extra.end());
  if (!j.is_object()) invalid(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }))
      invalid(path + "/" + key, "unknown field");
  return TorusDescriptor{lattice_from_json(j, path, limits)};
}

void torus_fields_to_json(const TorusDescriptor& t, json& j) {
  json l = lattice_to_json(t.character_lattice);
  for (auto& [k, v] : l.items()) j[k] = v;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto colon = msg.find(": "); colon != std::string::npos)
      msg = msg.substr(colon + 2);
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
      msg = "empty document";
    throw ParseError(msg, line, col);
  }
}

FiniteGroup group_from_json(const json& j, const std::string& path,
                            const Limits& limits) {
  if (!j.is_object()) invalid(path, "expected a group object");
  if (j.contains("cyclic")) {
    expect_object(j, path, {"cyclic"});
    const long n =
        small_int(j["cyclic"], path + "/cyclic", 1,
                  static_cast<long>(std::min<std::size_t>(
                      limits.max_group_order, kMaxParam)));
    return at_path(path, [&] {
      return FiniteGroup::cyclic(static_cast<std::size_t>(n), limits);
    });
  }
  expect_object(j, path, {"degree", "generators"});
  const long degree = small_int(field(j, "degree", path), path + "/degree", 1,
                                4096);
  const json& gens = field(j, "generators", path);
  expect_array(gens, path + "/generators");
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gp = path + "/generators/" + std::to_string(g);
    expect_array(gens[g], gp);
    Permutation p;
    for (std::size_t i = 0; i < gens[g].size(); ++i)
      p.push_back(static_cast<std::uint32_t>(small_int(
          gens[g][i], gp + "/" + std::to_string(i), 0, degree - 1)));
    perms.push_back(std::move(p));
  }
  return at_path(path, [&] {
    return FiniteGroup::from_generators(static_cast<std::size_t>(degree),
                                        std::move(perms), limits);
  });
}

json group_to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p);
  return {{"degree", g.degree()}, {"generators", gens}};
}

IntMatrix matrix_from_json(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    expect_array(j[i], rp);
    IntVector row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(integer_from_json(j[i][k], rp + "/" + std::to_string(k)));
    if (!rows.empty() && row.size() != rows.front().size())
      invalid(rp, "row length differs from row 0");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

json integer_to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

json vector_to_json(const IntVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

json matrix_to_json(const IntMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vector_to_json(m.row_vector(i)));
  return arr;
}

GLattice lattice_from_json(const json& j, const std::string& path,
                           const Limits& limits) {
  if (!j.is_object()) invalid(path, "expected a lattice object");
  FiniteGroup g = group_from_json(field(j, "galois", path), path + "/galois",
                                  limits);
  const json& action = field(j, "action", path);
  expect_array(action, path + "/action");
  std::vector<IntMatrix> mats;
  for (std::size_t i = 0; i < action.size(); ++i)
    mats.push_back(
        matrix_from_json(action[i], path + "/action/" + std::to_string(i)));
  long rank;
  if (j.contains("rank")) {
    rank = small_int(j["rank"], path + "/rank", 0,
                     static_cast<long>(limits.max_rank));
  } else if (!mats.empty()) {
    rank = static_cast<long>(mats.front().rows());
  } else {
    invalid(path, "missing field \"rank\" (required when there is no action "
                  "matrix)");
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    // An empty JSON matrix is the 0x0 action of a rank-0 lattice.
    if (mats[i].rows() == 0 && rank == 0) mats[i] = IntMatrix(0, 0);
    if (mats[i].rows() != static_cast<std::size_t>(rank) ||
        mats[i].cols() != static_cast<std::size_t>(rank))
      invalid(path + "/action/" + std::to_string(i),
              "expected a " + std::to_string(rank) + "x" +
                  std::to_string(rank) + " matrix");
  }
  return at_path(path + "/action", [&] {
    return GLattice::from_generator_action(
        std::move(g), static_cast<std::size_t>(rank), std::move(mats), limits);
  });
}

json lattice_to_json(const GLattice& m) {
  json action = json::array();
  for (const auto& a : m.generator_action()) action.push_back(matrix_to_json(a));
  return {{"galois", group_to_json(m.group())},
          {"rank", m.rank()},
          {"action", action}};
}

GroupDescriptor parse_descriptor(std::string_view text, const Limits& limits) {
  const json doc = parse_json(text);
  try {
    if (!doc.is_object()) invalid("/", "descriptor must be a JSON object");
    const json& v = field(doc, "v", "");
    if (!v.is_number_integer() || v.get<std::int64_t>() != 1)
      invalid("/v", "unsupported format version (expected 1)");
    const json& kind_j = field(doc, "kind", "");
    if (!kind_j.is_string()) invalid("/kind", "expected a string");
    const auto& kind = kind_j.get_ref<const std::string&>();

    if (kind == "torus") {
      return torus_from_json(doc, "", limits, {"v", "kind"});
    }
    if (kind == "semisimple") {
      expect_object(doc, "", {"v", "kind", "factors"});
      return SemisimpleGroup{factors_from_json(field(doc, "factors", ""),
                                               "/factors")};
    }
    if (kind == "inner") {
      expect_object(doc, "", {"v", "kind", "factors", "center_orders",
                              "embedding"});
      auto factors = factors_from_json(field(doc, "factors", ""), "/factors");
      const json& mj = field(doc, "center_orders", "");
      expect_array(mj, "/center_orders");
      std::vector<Integer> m;
      for (std::size_t i = 0; i < mj.size(); ++i)
        m.push_back(integer_from_json(mj[i], "/center_orders/" +
                                                 std::to_string(i)));
      IntMatrix a = doc.contains("embedding")
                        ? matrix_from_json(doc["embedding"], "/embedding")
                        : IntMatrix(0, m.size());
      return at_path("/embedding", [&] {
        return InnerDescriptor(std::move(factors), std::move(m), std::move(a));
      });
    }
    if (kind == "quasisplit" || kind == "general") {
      expect_object(doc, "", {"v", "kind", "factors", "coradical"});
      auto factors = factors_from_json(field(doc, "factors", ""), "/factors");
      TorusDescriptor c =
          torus_from_json(field(doc, "coradical", ""), "/coradical", limits, {});
      if (kind == "quasisplit")
        return QuasisplitGroup{std::move(factors), std::move(c)};
      return GeneralGroup{std::move(factors), std::move(c)};
    }
    invalid("/kind", "unknown kind \"" + kind + "\"");
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    invalid("/", e.what());
  }
}

json descriptor_to_json(const GroupDescriptor& desc) {
  json j{{"v", 1}};
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TorusDescriptor>) {
          j["kind"] = "torus";
          torus_fields_to_json(d, j);
        } else if constexpr (std::is_same_v<T, SemisimpleGroup>) {
          j["kind"] = "semisimple";
          j["factors"] = factors_to_json(d.factors);
        } else if constexpr (std::is_same_v<T, InnerDescriptor>) {
          j["kind"] = "inner";
          j["factors"] = factors_to_json(d.factors());
          j["center_orders"] = vector_to_json(d.center_orders());
          j["embedding"] = matrix_to_json(d.embedding());
        } else {
          j["kind"] = std::is_same_v<T, QuasisplitGroup> ? "quasisplit"
                                                         : "general";
          j["factors"] = factors_to_json(d.factors);
          json c;
          torus_fields_to_json(d.coradical, c);
          j["coradical"] = c;
        }
      },
      desc);
  return j;
}

std::string serialize_descriptor(const GroupDescriptor& desc) {
  return descriptor_to_json(desc).dump(2) + "\n";
}

forms::DiagonalFormSpec form_spec_from_json(const json& j) {
  expect_object(j, "", {"num_vars", "prime", "exponents", "coefficients"});
  forms::DiagonalFormSpec spec;
  spec.num_vars = static_cast<std::size_t>(
      small_int(field(j, "num_vars", ""), "/num_vars", 0, 16));
  spec.prime = static_cast<std::uint32_t>(
      j.contains("prime") ? small_int(j["prime"], "/prime", 3, 65521) : 5);
  const json& ex = field(j, "exponents", "");
  expect_array(ex, "/exponents");
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const std::string p = "/exponents/" + std::to_string(i);
    expect_array(ex[i], p);
    forms::Exponent e;
    for (std::size_t k = 0; k < ex[i].size(); ++k)
      e.push_back(small_int(ex[i][k], p + "/" + std::to_string(k), -1000, 1000));
    spec.exponents.push_back(std::move(e));
  }
  if (j.contains("coefficients")) {
    const json& co = j["coefficients"];
    expect_array(co, "/coefficients");
    for (std::size_t i = 0; i < co.size(); ++i) {
      long c = small_int(co[i], "/coefficients/" + std::to_string(i),
                         -kMaxParam, kMaxParam);
      long p = static_cast<long>(spec.prime);
      spec.coefficients.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
    }
  } else {
    spec.coefficients.assign(spec.exponents.size(), 1);
  }
  forms::validate(spec);
  return spec;
}

json invariants_to_json(const AbelianInvariants& inv) {
  return {{"torsion", vector_to_json(inv.torsion)},
          {"free_rank", inv.free_rank},
          {"text", inv.to_string()}};
}

json subgroup_to_json(const Subgroup& h) {
  return {{"order", h.order()}, {"elements", h.elements()}};
}

json report_to_json(const ClassificationReport& report, double elapsed_ms,
                    bool include_notes) {
  json w = std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, SectionWitness>) {
          return {{"type", "section"},
                  {"cover_rank", x.cover_rank},
                  {"section", matrix_to_json(x.section)},
                  {"projection", matrix_to_json(x.projection)}};
        } else if constexpr (std::is_same_v<T, TorusObstructionWitness>) {
          json o{{"type", "torus_obstruction"}};
          o["certificate"] =
              x.certificate
                  ? json{{"multiplier", vector_to_json(x.certificate->multiplier)},
                         {"modulus", integer_to_json(x.certificate->modulus)}}
                  : json(nullptr);
          o["obstruction"] =
              x.obstruction
                  ? json{{"lattice", x.obstruction_lattice},
                         {"subgroup", subgroup_to_json(x.obstruction->subgroup)},
                         {"h1", invariants_to_json(x.obstruction->invariants)}}
                  : json(nullptr);
          return o;
        } else if constexpr (std::is_same_v<T, SaturationWitness>) {
          return {{"type", "saturation"},
                  {"matrix", matrix_to_json(x.matrix)},
                  {"invariant_factors", vector_to_json(x.invariant_factors)}};
        } else if constexpr (std::is_same_v<T, NonSaturationWitness>) {
          return {{"type", "non_saturation"},
                  {"matrix", matrix_to_json(x.matrix)},
                  {"coefficients", vector_to_json(x.coefficients)},
                  {"divisor", integer_to_json(x.divisor)},
                  {"combination", vector_to_json(x.combination)}};
        } else {
          return {{"type", "factor"},
                  {"index", x.factor_index},
                  {"reason", x.reason}};
        }
      },
      report.witness);
  json j{{"verdict", to_string(report.verdict)},
         {"criterion", report.criterion},
         {"witness", w},
         {"timings_ms", {{"classify", elapsed_ms}}}};
  if (include_notes) j["notes"] = report.notes;
  return j;
}

}  // namespace specialred::io
