#include "relthue/io/problem_file.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "relthue/errors.hpp"
#include "relthue/io/format.hpp"

namespace relthue::io {

namespace {

constexpr Precision kExplicitBits = 512;

[[noreturn]] void fail(const std::string& name, const YAML::Node& node, const std::string& field,
                       const std::string& msg) {
  std::string where = name;
  if (node.IsDefined() && node.Mark().line >= 0) where += ":" + std::to_string(node.Mark().line + 1);
  throw InvalidInput(where + ": field '" + field + "': " + msg);
}

mpq_class exact_of(const std::string& name, const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) fail(name, node, field, "expected a number");
  try {
    return parse_exact(node.Scalar());
  } catch (const InvalidInput& e) {
    fail(name, node, field, e.what());
  }
}

mpz_class integer_of(const std::string& name, const YAML::Node& node, const std::string& field) {
  mpq_class q = exact_of(name, node, field);
  if (q.get_den() != 1) fail(name, node, field, "expected an integer, got " + q.get_str());
  return q.get_num();
}

Coords coords_of(const std::string& name, const YAML::Node& node, const std::string& field, int m) {
  Coords c(static_cast<size_t>(m), 0);
  if (node.IsScalar()) {
    c[0] = integer_of(name, node, field);
    return c;
  }
  if (!node.IsSequence() || static_cast<int>(node.size()) != m) {
    fail(name, node, field, "coefficient must be an integer or a list of " + std::to_string(m) + " coordinates");
  }
  for (int t = 0; t < m; ++t) c[static_cast<size_t>(t)] = integer_of(name, node[static_cast<size_t>(t)], field);
  return c;
}

// Leading coefficient first, as polynomials are usually written.
FieldPoly poly_of(const std::string& name, const YAML::Node& node, const std::string& field, const FieldPtr& M) {
  if (!node.IsSequence() || node.size() == 0) fail(name, node, field, "expected a non-empty coefficient list");
  std::vector<Coords> asc;
  for (size_t t = node.size(); t-- > 0;) asc.push_back(coords_of(name, node[t], field, M->degree()));
  return FieldPoly(M, std::move(asc));
}

CBall complex_of(const std::string& name, const YAML::Node& node, const std::string& field) {
  auto real = [&](const YAML::Node& v) {
    if (!v.IsScalar()) fail(name, v, field, "expected a decimal number");
    try {
      return Ball::from_decimal(v.Scalar(), kExplicitBits);
    } catch (const std::exception& e) {
      fail(name, v, field, e.what());
    }
  };
  if (node.IsSequence() && node.size() == 2) return CBall(real(node[0]), real(node[1]));
  return CBall(real(node), Ball(kExplicitBits));
}

FieldPtr field_of(const std::string& name, const YAML::Node& node) {
  if (!node.IsDefined()) return std::make_shared<const GroundField>(GroundField::rational());
  if (!node.IsMap()) fail(name, node, "field", "expected a mapping");
  const YAML::Node kind = node["kind"];
  if (!kind.IsDefined() || !kind.IsScalar()) fail(name, node, "field.kind", "missing");
  const std::string k = kind.Scalar();
  auto radicand = [&](const char* key) {
    const YAML::Node v = node[key];
    if (!v.IsDefined()) fail(name, node, std::string("field.") + key, "missing");
    mpz_class z = integer_of(name, v, std::string("field.") + key);
    if (!z.fits_slong_p()) fail(name, v, std::string("field.") + key, "too large");
    return z.get_si();
  };
  try {
    GroundField M = GroundField::rational();
    if (k == "rational") {
    } else if (k == "real_quadratic") {
      long D = radicand("D");
      if (D <= 1) fail(name, node["D"], "field.D", "must be > 1");
      M = GroundField::real_quadratic(D);
    } else if (k == "imag_quadratic") {
      long d = radicand("d");
      if (d < 1) fail(name, node["d"], "field.d", "must be >= 1");
      M = GroundField::imaginary_quadratic(d);
    } else if (k == "explicit") {
      const YAML::Node rows = node["conjugates"];
      if (!rows.IsSequence() || rows.size() == 0) fail(name, node, "field.conjugates", "expected a square matrix");
      field::ComplexMatrix S;
      for (const auto& row : rows) {
        if (!row.IsSequence() || row.size() != rows.size()) fail(name, row, "field.conjugates", "row length differs");
        std::vector<CBall> r;
        for (const auto& e : row) r.push_back(complex_of(name, e, "field.conjugates"));
        S.push_back(std::move(r));
      }
      M = GroundField::from_conjugates(std::move(S));
    } else {
      fail(name, kind, "field.kind", "unknown kind '" + k + "'");
    }
    if (const YAML::Node deg = node["degree"]; deg.IsDefined() && integer_of(name, deg, "field.degree") != M.degree()) {
      fail(name, deg, "field.degree", "does not match the field kind");
    }
    return std::make_shared<const GroundField>(std::move(M));
  } catch (const InvalidInput&) {
    throw;
  } catch (const Error& e) {
    fail(name, node, "field", e.what());
  }
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "direct") return Mode::Direct;
  if (s == "split") return Mode::Split;
  if (s == "resultant") return Mode::Resultant;
  throw InvalidInput("unknown mode '" + s + "' (expected direct, split or resultant)");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Direct: return "direct";
    case Mode::Split: return "split";
    case Mode::Resultant: return "resultant";
  }
  return "?";
}

ProblemFile parse_problem(const std::string& text, const std::string& name) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw InvalidInput(name + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!root.IsMap()) throw InvalidInput(name + ": expected a mapping at top level");

  ProblemFile p;
  p.name = name;
  if (const YAML::Node mode = root["mode"]; mode.IsDefined()) {
    try {
      p.mode = parse_mode(mode.Scalar());
    } catch (const InvalidInput& e) {
      fail(name, mode, "mode", e.what());
    }
  }
  p.field = field_of(name, root["field"]);

  const bool direct_payload = root["alpha_poly"].IsDefined();
  const bool resultant_payload = root["f"].IsDefined();
  if (direct_payload == resultant_payload) {
    fail(name, root, direct_payload ? "f" : "alpha_poly", "give exactly one of alpha_poly or f");
  }
  if (direct_payload) {
    p.alpha_poly = poly_of(name, root["alpha_poly"], "alpha_poly", p.field);
    if (root["lambda_poly"].IsDefined()) p.lambda_poly = poly_of(name, root["lambda_poly"], "lambda_poly", p.field);
    if (!root["c0"].IsDefined()) fail(name, root, "c0", "missing");
    p.c0 = exact_of(name, root["c0"], "c0");
    if (p.c0 <= 0) fail(name, root["c0"], "c0", "must be positive");
    if (p.alpha_poly->degree() < 1) fail(name, root["alpha_poly"], "alpha_poly", "alphas list is empty");
  } else {
    p.f = poly_of(name, root["f"], "f", p.field);
    if (!root["c"].IsDefined()) fail(name, root, "c", "missing");
    p.c = exact_of(name, root["c"], "c");
    if (p.c <= 0) fail(name, root["c"], "c", "must be positive");
    if (root["c0"].IsDefined() || root["lambda_poly"].IsDefined()) {
      fail(name, root, "c0", "c0 and lambda_poly belong to the alpha_poly payload");
    }
  }
  if (p.mode == Mode::Resultant && !resultant_payload) fail(name, root["mode"], "mode", "resultant mode needs f and c");

  if (const YAML::Node k = root["k"]; k.IsDefined()) {
    mpz_class kv = integer_of(name, k, "k");
    if (kv < 0 || kv > 1000) fail(name, k, "k", "must be a small nonnegative integer");
    p.k = static_cast<int>(kv.get_si());
  }
  if (resultant_payload && p.k != 0) fail(name, root["k"], "k", "resultant problems have k = 0");
  if (!root["Z0"].IsDefined()) fail(name, root, "Z0", "missing");
  p.Z0 = exact_of(name, root["Z0"], "Z0");
  if (p.Z0 < 1) fail(name, root["Z0"], "Z0", "must be >= 1");

  if (const YAML::Node o = root["options"]; o.IsDefined()) {
    if (!o.IsMap()) fail(name, o, "options", "expected a mapping");
    if (const YAML::Node e = o["epsilons"]; e.IsDefined()) {
      auto eps_of = [&](const YAML::Node& v) {
        double x = exact_of(name, v, "options.epsilons").get_d();
        if (!(x > 0 && x < 1)) fail(name, v, "options.epsilons", "each epsilon must lie in (0, 1)");
        return x;
      };
      if (e.IsScalar() && e.Scalar() == "optimize") {
        p.options.optimize_eps = true;
      } else if (e.IsSequence()) {
        for (const auto& v : e) p.options.epsilons.push_back(eps_of(v));
      } else {
        p.options.epsilons.push_back(eps_of(e));
      }
    }
    if (const YAML::Node b = o["enumeration_budget"]; b.IsDefined()) {
      p.options.enumeration_budget = exact_of(name, b, "options.enumeration_budget").get_d();
    }
    if (const YAML::Node h = o["H_cap"]; h.IsDefined()) {
      p.options.H_cap = static_cast<int>(integer_of(name, h, "options.H_cap").get_si());
    }
    if (const YAML::Node d = o["precision_floor"]; d.IsDefined()) {
      p.options.precision_floor = static_cast<int>(integer_of(name, d, "options.precision_floor").get_si());
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

ProblemInstance build_instance(const ProblemFile& p) {
  if (p.is_resultant()) return resultant::to_thue_instance(build_resultant(p), p.Z0);
  FieldPoly h = p.lambda_poly ? *p.lambda_poly : FieldPoly(p.field, {});
  return ProblemInstance::from_polynomials(*p.alpha_poly, h, Rhs::from_c0(p.c0, p.k), p.Z0);
}

resultant::ResultantProblem build_resultant(const ProblemFile& p) {
  if (!p.is_resultant()) throw InvalidInput(p.name + ": resultant mode needs f and c");
  return resultant::ResultantProblem{*p.f, p.c};
}

}  // namespace relthue::io
