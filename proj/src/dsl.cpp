#include "qml/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>

#include <nlohmann/json.hpp>

namespace qml {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ParsedNode parse_any() {
    ws();
    if (peek_lit("|-")) {
      Assertion first = parse_assertion_node();
      ws();
      if (match_kw("iff")) {
        MetaJunction meta = parse_junction_node();
        expect_end();
        return ReflectionClaim{std::move(first), std::move(meta)};
      }
      if (peek_lit(",")) {  // `|- A, B` is a sequent with empty antecedent
        pos_ = 0;
        Sequent s = parse_sequent_node();
        expect_end();
        return s;
      }
      MetaJunction m{{std::move(first)}};
      while (match_kw("and")) m.parts.push_back(parse_assertion_node());
      expect_end();
      return m;
    }
    Sequent s = parse_sequent_node();
    expect_end();
    return s;
  }

  MetaJunction parse_junction_only() {
    MetaJunction m = parse_junction_node();
    expect_end();
    return m;
  }

  Assertion parse_assertion_only() {
    Assertion a = parse_assertion_node();
    expect_end();
    return a;
  }

  Complex parse_complex_only() {
    const Complex z = parse_complex_node();
    expect_end();
    return z;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected,
                         const std::string& what) {
    const SourceSpan span{pos_, std::min(pos_ + 1, text_.size())};
    throw ParseError(span, std::move(expected),
                     what + " at offset " + std::to_string(pos_));
  }

  void ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_lit(const char* s) {
    ws();
    return text_.compare(pos_, std::strlen(s), s) == 0;
  }

  bool match_lit(const char* s) {
    if (!peek_lit(s)) return false;
    pos_ += std::strlen(s);
    return true;
  }

  // Alphabetic keywords must end at a word boundary.
  bool match_kw(const char* s) {
    ws();
    const size_t n = std::strlen(s);
    if (text_.compare(pos_, n, s) != 0) return false;
    if (pos_ + n < text_.size()) {
      const unsigned char next = text_[pos_ + n];
      if (std::isalnum(next) || next == '_') return false;
    }
    pos_ += n;
    return true;
  }

  void expect_lit(const char* s, const char* what) {
    if (!match_lit(s)) fail({s}, std::string("expected ") + what);
  }

  void expect_end() {
    ws();
    if (pos_ != text_.size()) fail({"end of input"}, "unexpected trailing text");
  }

  double parse_real() {
    ws();
    size_t p = pos_;
    double sign = 1.0;
    if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
      if (text_[p] == '-') sign = -1.0;
      ++p;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(
        text_.data() + p, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + p)
      fail({"number"}, "expected a real number");
    pos_ = static_cast<size_t>(ptr - text_.data());
    return sign * value;
  }

  Complex parse_complex_node() {
    const double first = parse_real();
    if (match_lit("@")) {
      const double theta = parse_real();
      return std::polar(first, theta);
    }
    const size_t save = pos_;
    ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const double sign = text_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      try {
        const double im = parse_real();
        if (match_lit("i")) return Complex(first, sign * im);
      } catch (const ParseError&) {
        // not an imaginary continuation
      }
      pos_ = save;
    }
    return Complex(first, 0.0);
  }

  PropPtr parse_primary() {
    if (match_kw("p0")) return make_classical_atom("p0");
    if (match_kw("p1")) return make_classical_atom("p1");
    if (match_lit("p{")) {
      const Complex label = parse_complex_node();
      expect_lit("}", "'}' after atom label");
      return make_quantum_atom(label);
    }
    if (match_lit("(")) {
      PropPtr inner = parse_prop();
      expect_lit(")", "')'");
      return inner;
    }
    fail({"p0", "p1", "p{", "("}, "expected a proposition");
  }

  // "&" binds tighter than the quantum connective; never eats "&_".
  bool match_classical_amp() {
    ws();
    if (pos_ >= text_.size() || text_[pos_] != '&') return false;
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '_') return false;
    ++pos_;
    return true;
  }

  PropPtr parse_and_chain() {
    PropPtr left = parse_primary();
    while (match_classical_amp())
      left = make_classical_and(left, parse_primary());
    return left;
  }

  PropPtr parse_prop() {
    PropPtr left = parse_and_chain();
    for (;;) {
      const size_t save = pos_;
      if (!match_lit("(")) break;
      try {
        const Complex d1 = parse_complex_node();
        if (!match_lit("&_")) {
          pos_ = save;
          break;
        }
        const Complex d2 = parse_complex_node();
        expect_lit(")", "')' closing the quantum connective");
        left = make_quantum_and(d1, d2, left, parse_and_chain());
      } catch (const ParseError&) {
        pos_ = save;
        break;
      }
    }
    return left;
  }

  Assertion parse_assertion_node() {
    ws();
    if (!match_lit("|-")) fail({"|-"}, "expected turnstile");
    if (match_lit("^{")) {
      const Complex degree = parse_complex_node();
      expect_lit("}", "'}' after assertion degree");
      return Assertion::quantum(degree, parse_prop());
    }
    return Assertion::classical(parse_prop());
  }

  MetaJunction parse_junction_node() {
    MetaJunction m{{parse_assertion_node()}};
    while (match_kw("and")) m.parts.push_back(parse_assertion_node());
    return m;
  }

  Sequent parse_sequent_node() {
    Sequent s;
    ws();
    if (!peek_lit("|-")) {
      s.antecedent.push_back(parse_prop());
      while (match_lit(",")) s.antecedent.push_back(parse_prop());
    }
    if (!match_lit("|-")) fail({"|-"}, "expected turnstile");
    ws();
    if (pos_ < text_.size()) {
      s.consequent.push_back(parse_prop());
      while (match_lit(",")) s.consequent.push_back(parse_prop());
    }
    return s;
  }
};

}  // namespace

ParsedNode parse(const std::string& text) { return Parser(text).parse_any(); }

MetaJunction parse_junction(const std::string& text) {
  return Parser(text).parse_junction_only();
}

Assertion parse_assertion(const std::string& text) {
  return Parser(text).parse_assertion_only();
}

Complex parse_complex(const std::string& text) {
  return Parser(text).parse_complex_only();
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

namespace {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// atom = 3, classical & = 2, quantum connective = 1; both left-associative.
int precedence(const Proposition& p) {
  if (std::holds_alternative<QuantumAnd>(p.node)) return 1;
  if (std::holds_alternative<ClassicalAnd>(p.node)) return 2;
  return 3;
}

void format_prop(const Proposition& p, int parent_prec, bool right_child,
                 std::string& out) {
  const int prec = precedence(p);
  const bool parens =
      prec < parent_prec || (prec == parent_prec && right_child);
  if (parens) out += '(';
  if (const auto* ca = std::get_if<ClassicalAtom>(&p.node)) {
    out += ca->id;
  } else if (const auto* qa = std::get_if<QuantumAtom>(&p.node)) {
    out += "p{";
    out += format(qa->label);
    out += '}';
  } else if (const auto* c = std::get_if<ClassicalAnd>(&p.node)) {
    format_prop(*c->left, 2, false, out);
    out += " & ";
    format_prop(*c->right, 2, true, out);
  } else {
    const auto& q = std::get<QuantumAnd>(p.node);
    format_prop(*q.left, 1, false, out);
    out += " (";
    out += format(q.degree_left);
    out += " &_ ";
    out += format(q.degree_right);
    out += ") ";
    format_prop(*q.right, 1, true, out);
  }
  if (parens) out += ')';
}

}  // namespace

std::string format(Complex z) {
  std::string s = format_real(z.real());
  if (z.imag() != 0.0) {
    s += z.imag() < 0.0 ? '-' : '+';
    s += format_real(std::abs(z.imag()));
    s += 'i';
  }
  return s;
}

std::string format(const Proposition& p) {
  std::string out;
  format_prop(p, 0, false, out);
  return out;
}

std::string format(const Assertion& a) {
  std::string out = "|-";
  if (a.degree) {
    out += "^{";
    out += format(*a.degree);
    out += '}';
  }
  out += ' ';
  out += format(*a.prop);
  return out;
}

std::string format(const MetaJunction& m) {
  std::string out;
  for (size_t i = 0; i < m.parts.size(); ++i) {
    if (i) out += " and ";
    out += format(m.parts[i]);
  }
  return out;
}

std::string format(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += format(*s.antecedent[i]);
  }
  out += s.antecedent.empty() ? "|-" : " |-";
  for (size_t i = 0; i < s.consequent.size(); ++i) {
    out += i ? ", " : " ";
    out += format(*s.consequent[i]);
  }
  return out;
}

std::string format(const ReflectionClaim& c) {
  return format(c.object) + " iff " + format(c.meta);
}

std::string format(const ParsedNode& n) {
  return std::visit([](const auto& x) { return format(x); }, n);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

constexpr int kSchemaVersion = 1;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_of(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex value must be a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

void require_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema"))
    throw SchemaError("document lacks a schema field");
  if (j["schema"] != kSchemaVersion)
    throw SchemaError("unsupported schema version " + j["schema"].dump());
}

json prop_json(const Proposition& p) {
  json j;
  if (const auto* ca = std::get_if<ClassicalAtom>(&p.node)) {
    j["type"] = "classical_atom";
    j["id"] = ca->id;
  } else if (const auto* qa = std::get_if<QuantumAtom>(&p.node)) {
    j["type"] = "quantum_atom";
    j["label"] = complex_json(qa->label);
  } else if (const auto* c = std::get_if<ClassicalAnd>(&p.node)) {
    j["type"] = "classical_and";
    j["left"] = prop_json(*c->left);
    j["right"] = prop_json(*c->right);
  } else {
    const auto& q = std::get<QuantumAnd>(p.node);
    j["type"] = "quantum_and";
    j["degree_left"] = complex_json(q.degree_left);
    j["degree_right"] = complex_json(q.degree_right);
    j["left"] = prop_json(*q.left);
    j["right"] = prop_json(*q.right);
  }
  return j;
}

PropPtr prop_of(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "classical_atom")
    return make_classical_atom(j.at("id").get<std::string>());
  if (type == "quantum_atom")
    return make_quantum_atom(complex_of(j.at("label")));
  if (type == "classical_and")
    return make_classical_and(prop_of(j.at("left")), prop_of(j.at("right")));
  if (type == "quantum_and")
    return make_quantum_and(complex_of(j.at("degree_left")),
                            complex_of(j.at("degree_right")),
                            prop_of(j.at("left")), prop_of(j.at("right")));
  throw SchemaError("unknown proposition type '" + type + "'");
}

json assertion_json(const Assertion& a) {
  json j;
  j["type"] = "assertion";
  j["degree"] = a.degree ? complex_json(*a.degree) : json(nullptr);
  j["prop"] = prop_json(*a.prop);
  return j;
}

Assertion assertion_of(const json& j) {
  PropPtr prop = prop_of(j.at("prop"));
  if (j.at("degree").is_null()) return Assertion::classical(std::move(prop));
  return Assertion::quantum(complex_of(j.at("degree")), std::move(prop));
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

json to_json(const FockVector& v) {
  json amps = json::array();
  for (int n = 0; n <= v.truncation_order(); ++n)
    amps.push_back(complex_json(v.amplitudes[n]));
  return json{{"schema", kSchemaVersion},
              {"type", "fock_vector"},
              {"truncation_order", v.truncation_order()},
              {"amplitudes", amps},
              {"truncation_loss", v.truncation_loss}};
}

FockVector fock_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    const auto& amps = j.at("amplitudes");
    const int N = j.at("truncation_order").get<int>();
    if (!amps.is_array() || static_cast<int>(amps.size()) != N + 1)
      throw SchemaError("amplitude count does not match truncation order");
    FockVector v;
    v.amplitudes.resize(N + 1);
    for (int n = 0; n <= N; ++n) v.amplitudes[n] = complex_of(amps[n]);
    v.truncation_loss = j.value("truncation_loss", 0.0);
    return v;
  });
}

json to_json(const QubitState& q) {
  json j{{"schema", kSchemaVersion},
         {"lambda0", complex_json(q.lambda0)},
         {"lambda1", complex_json(q.lambda1)},
         {"residual", q.constraint_residual()}};
  if (q.renormalized) j["renormalized"] = true;
  return j;
}

QubitState qubit_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    QubitState q;
    q.lambda0 = complex_of(j.at("lambda0"));
    q.lambda1 = complex_of(j.at("lambda1"));
    q.renormalized = j.value("renormalized", false);
    return q;
  });
}

json to_json(const AssertionSemantics& s) {
  return json{{"schema", kSchemaVersion},
              {"type", "assertion_semantics"},
              {"g", complex_json(s.g)},
              {"v", s.v}};
}

AssertionSemantics semantics_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    return AssertionSemantics{complex_of(j.at("g")), j.at("v").get<double>()};
  });
}

json to_json(const Proposition& p) {
  json j = prop_json(p);
  j["schema"] = kSchemaVersion;
  return j;
}

PropPtr prop_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    return prop_of(j);
  });
}

json to_json(const Assertion& a) {
  json j = assertion_json(a);
  j["schema"] = kSchemaVersion;
  return j;
}

Assertion assertion_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    return assertion_of(j);
  });
}

json to_json(const MetaJunction& m) {
  json parts = json::array();
  for (const Assertion& a : m.parts) parts.push_back(assertion_json(a));
  return json{{"schema", kSchemaVersion},
              {"type", "meta_junction"},
              {"parts", parts}};
}

MetaJunction junction_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    MetaJunction m;
    for (const json& p : j.at("parts")) m.parts.push_back(assertion_of(p));
    if (m.parts.empty()) throw SchemaError("meta_junction needs parts");
    return m;
  });
}

json to_json(const Sequent& s) {
  json ante = json::array(), cons = json::array();
  for (const PropPtr& p : s.antecedent) ante.push_back(prop_json(*p));
  for (const PropPtr& p : s.consequent) cons.push_back(prop_json(*p));
  return json{{"schema", kSchemaVersion},
              {"type", "sequent"},
              {"antecedent", ante},
              {"consequent", cons}};
}

Sequent sequent_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    Sequent s;
    for (const json& p : j.at("antecedent")) s.antecedent.push_back(prop_of(p));
    for (const json& p : j.at("consequent")) s.consequent.push_back(prop_of(p));
    return s;
  });
}

json to_json(const ReflectionClaim& c) {
  return json{{"schema", kSchemaVersion},
              {"type", "reflection_claim"},
              {"object", assertion_json(c.object)},
              {"meta", to_json(c.meta)}};
}

json to_json(const ParsedNode& n) {
  return std::visit([](const auto& x) { return to_json(x); }, n);
}

json to_json(const Task& t) {
  json phases = json::array();
  for (const TaskPhase& p : t.phases) {
    if (const auto* c = std::get_if<ComputePhase>(&p)) {
      json pj{{"type", "compute"},
              {"gate", gate_name(c->gate)},
              {"qubit", c->qubit}};
      if (c->gate == GateKind::Phase) pj["theta"] = c->theta;
      phases.push_back(pj);
    } else {
      phases.push_back(json{{"type", "act"},
                            {"qubit", std::get<ActPhase>(p).qubit}});
    }
  }
  return json{{"schema", kSchemaVersion},
              {"type", "task"},
              {"width", t.width},
              {"phases", phases}};
}

Task task_from_json(const json& j) {
  return guarded([&] {
    require_schema(j);
    std::vector<TaskPhase> phases;
    for (const json& pj : j.at("phases")) {
      const std::string type = pj.at("type").get<std::string>();
      if (type == "compute") {
        ComputePhase c;
        c.gate = gate_from_name(pj.at("gate").get<std::string>());
        c.qubit = pj.at("qubit").get<int>();
        c.theta = pj.value("theta", 0.0);
        phases.emplace_back(c);
      } else if (type == "act") {
        phases.emplace_back(ActPhase{pj.at("qubit").get<int>()});
      } else {
        throw SchemaError("unknown phase type '" + type + "'");
      }
    }
    return build_task(std::move(phases), j.at("width").get<int>());
  });
}

json to_json(const TrajectoryReport& r) {
  json amps = json::array();
  for (int i = 0; i < r.final_amplitudes.size(); ++i)
    amps.push_back(complex_json(r.final_amplitudes[i]));
  json log = json::array();
  for (const DecoherenceEvent& e : r.decoherence_log)
    log.push_back(json{{"step", e.step}, {"bits", e.collapsed_bits}});
  return json{{"schema", kSchemaVersion},
              {"type", "trajectory_report"},
              {"lattice", r.lattice_size},
              {"width", r.width},
              {"p_dec", r.p_dec},
              {"seed", r.seed},
              {"rng_algorithm", r.rng_algorithm},
              {"position_marginals", r.position_marginals},
              {"final_amplitudes", amps},
              {"decoherence_log", log}};
}

}  // namespace qml
