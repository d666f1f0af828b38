#include "app/problem_file.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "hfm/error.hpp"
#include "json.hpp"

namespace hfm::app {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto k : allowed) known = known || item.key() == k;
    if (!known) throw ProblemError("unknown key '" + item.key() + "' in " + where);
  }
}

bool mentions_t(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Number: return false;
    case Expr::Kind::Variable: return true;
    case Expr::Kind::Negate:
    case Expr::Kind::Gamma:
    case Expr::Kind::Sqrt: return mentions_t(e.lhs());
    default: return mentions_t(e.lhs()) || mentions_t(e.rhs());
  }
}

double constant(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const Expr e = parse(v.get<std::string>());
    if (mentions_t(e)) throw ProblemError(where + " must not depend on t");
    return e(0.0);
  }
  throw ProblemError(where + " must be a number or a constant expression string");
}

Expr expression(const json& v, const std::string& where) {
  if (v.is_string()) return parse(v.get<std::string>());
  if (v.is_number()) return Expr::number(v.get<double>());
  throw ProblemError(where + " must be an expression string");
}

const json& required(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ProblemError(std::string("missing key '") + key + "'");
  return *it;
}

std::string number_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ProblemError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                       e.what());
  }
  if (!doc.is_object()) throw ProblemError("problem file must be a JSON object");
  reject_unknown(doc, {"alpha", "terms", "forcing", "init", "t_end", "exact"}, "problem");

  const double alpha = constant(required(doc, "alpha"), "alpha");

  std::vector<Term> terms;
  if (auto it = doc.find("terms"); it != doc.end()) {
    if (!it->is_array()) throw ProblemError("terms must be a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& t = (*it)[i];
      const std::string where = "terms[" + std::to_string(i) + "]";
      if (!t.is_object()) throw ProblemError(where + " must be an object");
      reject_unknown(t, {"coeff", "beta", "power"}, where);
      Term term;
      term.coeff = expression(required(t, "coeff"), where + ".coeff");
      term.beta = constant(required(t, "beta"), where + ".beta");
      if (auto p = t.find("power"); p != t.end()) term.power = constant(*p, where + ".power");
      terms.push_back(std::move(term));
    }
  }

  const Expr forcing = expression(required(doc, "forcing"), "forcing");

  const json& init_json = required(doc, "init");
  if (!init_json.is_array()) throw ProblemError("init must be a list of numbers");
  std::vector<double> init;
  for (std::size_t i = 0; i < init_json.size(); ++i) {
    init.push_back(constant(init_json[i], "init[" + std::to_string(i) + "]"));
  }

  double t_end = 1.0;
  if (auto it = doc.find("t_end"); it != doc.end()) t_end = constant(*it, "t_end");

  std::optional<Expr> exact;
  if (auto it = doc.find("exact"); it != doc.end()) exact = expression(*it, "exact");

  return ProblemFile{FdeProblem(alpha, std::move(terms), forcing, std::move(init), t_end),
                     std::move(exact)};
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemError("cannot open problem file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string to_json(const ProblemFile& file) {
  const FdeProblem& p = file.problem;
  std::string out = "{\n  \"alpha\": " + number_text(p.alpha()) + ",\n  \"terms\": [";
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const Term& t = p.terms()[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"coeff\": " + json(t.coeff.to_string()).dump() + ", \"beta\": " +
           number_text(t.beta) + ", \"power\": " + number_text(t.power) + "}";
  }
  out += p.terms().empty() ? "],\n" : "\n  ],\n";
  out += "  \"forcing\": " + json(p.forcing().to_string()).dump() + ",\n  \"init\": [";
  for (std::size_t i = 0; i < p.init().size(); ++i) {
    out += (i ? ", " : "") + number_text(p.init()[i]);
  }
  out += "],\n  \"t_end\": " + number_text(p.t_end());
  if (file.exact) out += ",\n  \"exact\": " + json(file.exact->to_string()).dump();
  out += "\n}\n";
  return out;
}

}  // namespace hfm::app
