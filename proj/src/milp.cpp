#include "confsched/milp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "confsched/decoders.hpp"
#include "confsched/error.hpp"

namespace confsched {

std::string_view to_string(Formulation f) {
  switch (f) {
    case Formulation::F1: return "F1";
    case Formulation::F2: return "F2";
    case Formulation::F3: return "F3";
  }
  return "?";
}

Formulation parse_formulation(std::string_view name) {
  std::string u(name);
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "F1" || u == "1") return Formulation::F1;
  if (u == "F2" || u == "2") return Formulation::F2;
  if (u == "F3" || u == "3") return Formulation::F3;
  throw ParameterError("unknown formulation '" + std::string(name) + "' (expected F1, F2 or F3)");
}

int MilpModel::add_variable(std::string name, VarKind kind, double lower, std::optional<double> upper) {
  const int id = static_cast<int>(variables.size());
  if (!index_.emplace(name, id).second) throw Error("duplicate variable " + name);
  variables.push_back(Variable{std::move(name), kind, lower, upper});
  return id;
}

bool MilpModel::add_constraint(Constraint c) {
  std::erase_if(c.terms, [](const Term& t) { return t.coef == 0; });
  if (c.terms.empty()) return false;
  constraints.push_back(std::move(c));
  return true;
}

std::optional<int> MilpModel::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MilpModel::count(VarKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(variables.begin(), variables.end(), [kind](const Variable& v) { return v.kind == kind; }));
}

Time minimum_horizon(const Instance& inst) {
  const Time total = inst.total_processing();
  return std::max(inst.max_processing(), (total + inst.m() - 1) / inst.m());
}

namespace {

std::string join(std::string_view prefix, std::initializer_list<Time> parts) {
  std::string s(prefix);
  for (Time v : parts) {
    s += '_';
    s += std::to_string(v);
  }
  return s;
}

MilpModel build_f1(const Instance& inst, Time T) {
  MilpModel model;
  const int n = inst.n(), m = inst.m();
  // first[j][i]: variable of x_{i,j,0}; the starts 0..T-p_j follow.
  std::vector<std::vector<int>> first(n, std::vector<int>(m));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      first[j][i] = static_cast<int>(model.variables.size());
      for (Time t = 0; t + inst.p(j) <= T; ++t) {
        const int v = model.add_variable(join("x", {i + 1, j + 1, t}), VarKind::Binary);
        model.objective.push_back({v, t + inst.p(j)});
      }
    }
  }
  // Starts s with s <= t < s + p_j.
  auto covering = [&](int j, int i, Time t, std::vector<Term>& terms) {
    const Time lo = std::max<Time>(0, t - inst.p(j) + 1), hi = std::min(t, T - inst.p(j));
    for (Time s = lo; s <= hi; ++s) terms.push_back({first[j][i] + static_cast<int>(s), 1});
  };

  for (int j = 0; j < n; ++j) {
    Constraint c{join("assign", {j + 1}), {}, Sense::Equal, 1};
    for (int i = 0; i < m; ++i)
      for (Time t = 0; t + inst.p(j) <= T; ++t) c.terms.push_back({first[j][i] + static_cast<int>(t), 1});
    model.add_constraint(std::move(c));
  }
  for (int i = 0; i < m; ++i) {
    for (Time t = 0; t < T; ++t) {
      Constraint c{join("mach", {i + 1, t}), {}, Sense::LessEqual, 1};
      for (int j = 0; j < n; ++j) covering(j, i, t, c.terms);
      model.add_constraint(std::move(c));
    }
  }
  for (auto [j, k] : inst.conflicts().edges()) {
    for (Time t = 0; t < T; ++t) {
      Constraint c{join("conf", {j + 1, k + 1, t}), {}, Sense::LessEqual, 1};
      for (int i = 0; i < m; ++i) {
        covering(j, i, t, c.terms);
        covering(k, i, t, c.terms);
      }
      model.add_constraint(std::move(c));
    }
  }
  return model;
}

// Jobs of J' as 0 (dummy) and j + 1.
Time pprime(const Instance& inst, int a) { return a == 0 ? 0 : inst.p(a - 1); }

MilpModel build_f2(const Instance& inst, Time T) {
  MilpModel model;
  const int n = inst.n(), N = n + 1;
  // base[a][b]: variable of xp_{a,b,p'(a)}, or -1 when the range is empty.
  std::vector<std::vector<int>> base(N, std::vector<int>(N, -1));
  auto lo = [&](int a) { return pprime(inst, a); };
  auto hi = [&](int b) { return T - pprime(inst, b); };
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      if (a == b || lo(a) > hi(b)) continue;
      base[a][b] = static_cast<int>(model.variables.size());
      for (Time t = lo(a); t <= hi(b); ++t) {
        const int v = model.add_variable(join("xp", {a, b, t}), VarKind::Binary);
        if (b != 0) model.objective.push_back({v, t + pprime(inst, b)});
      }
    }
  }
  auto var = [&](int a, int b, Time t) { return base[a][b] + static_cast<int>(t - lo(a)); };
  auto has = [&](int a, int b, Time t) { return a != b && base[a][b] >= 0 && t >= lo(a) && t <= hi(b); };

  std::vector<int> yvar;
  const auto edges = inst.conflicts().edges();
  for (auto [j, k] : edges) yvar.push_back(model.add_variable(join("y", {j + 1, k + 1}), VarKind::Binary));

  Constraint src{"src", {}, Sense::LessEqual, inst.m()};
  Constraint snk{"snk", {}, Sense::LessEqual, inst.m()};
  for (int b = 1; b < N; ++b)
    for (Time t = lo(0); t <= hi(b); ++t)
      if (has(0, b, t)) src.terms.push_back({var(0, b, t), 1});
  for (int a = 1; a < N; ++a)
    for (Time t = lo(a); t <= hi(0); ++t)
      if (has(a, 0, t)) snk.terms.push_back({var(a, 0, t), 1});
  model.add_constraint(std::move(src));
  model.add_constraint(std::move(snk));

  for (int k = 1; k < N; ++k) {
    Constraint pred{join("pred", {k}), {}, Sense::Equal, 1};
    Constraint succ{join("succ", {k}), {}, Sense::Equal, 1};
    for (int a = 0; a < N; ++a)
      for (Time t = 0; t <= T; ++t) {
        if (has(a, k, t)) pred.terms.push_back({var(a, k, t), 1});
        if (has(k, a, t)) succ.terms.push_back({var(k, a, t), 1});
      }
    model.add_constraint(std::move(pred));
    model.add_constraint(std::move(succ));
  }
  for (int k = 1; k < N; ++k) {
    const Time pk = pprime(inst, k);
    for (Time t = 0; t <= T - pk; ++t) {
      Constraint c{join("link", {k, t}), {}, Sense::LessEqual, 0};
      for (int a = 0; a < N; ++a)
        if (has(a, k, t)) c.terms.push_back({var(a, k, t), 1});
      for (int b = 0; b < N; ++b)
        for (Time u = t + pk; u <= T; ++u)
          if (has(k, b, u)) c.terms.push_back({var(k, b, u), -1});
      model.add_constraint(std::move(c));
    }
  }
  // Start of job k is sum t xp_{.,k,t}; completion adds p_k.
  auto add_start = [&](int k, std::int64_t sign, bool completion, std::vector<Term>& terms) {
    for (int a = 0; a < N; ++a)
      for (Time t = 0; t <= T; ++t)
        if (has(a, k, t)) terms.push_back({var(a, k, t), sign * (t + (completion ? pprime(inst, k) : 0))});
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int j = edges[e].first + 1, k = edges[e].second + 1;
    Constraint before{join("cb", {j, k}), {}, Sense::LessEqual, T};
    add_start(j, 1, true, before.terms);
    add_start(k, -1, false, before.terms);
    before.terms.push_back({yvar[e], T});
    Constraint after{join("ca", {j, k}), {}, Sense::GreaterEqual, 0};
    add_start(j, 1, false, after.terms);
    add_start(k, -1, true, after.terms);
    after.terms.push_back({yvar[e], T});
    model.add_constraint(std::move(before));
    model.add_constraint(std::move(after));
  }
  return model;
}

MilpModel build_f3(const Instance& inst, Time T) {
  MilpModel model;
  const int n = inst.n(), N = n + 1;
  std::vector<std::vector<int>> x(N, std::vector<int>(N, -1));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b) x[a][b] = model.add_variable(join("x", {a, b}), VarKind::Binary);
  std::vector<int> yvar;
  const auto edges = inst.conflicts().edges();
  for (auto [j, k] : edges) yvar.push_back(model.add_variable(join("y", {j + 1, k + 1}), VarKind::Binary));
  std::vector<int> C(N, -1);
  for (int j = 1; j < N; ++j) {
    C[j] = model.add_variable(join("C", {j}), VarKind::Continuous, static_cast<double>(pprime(inst, j)));
    model.objective.push_back({C[j], 1});
  }

  Constraint src{"src", {}, Sense::LessEqual, inst.m()};
  Constraint snk{"snk", {}, Sense::LessEqual, inst.m()};
  for (int j = 1; j < N; ++j) {
    src.terms.push_back({x[0][j], 1});
    snk.terms.push_back({x[j][0], 1});
  }
  model.add_constraint(std::move(src));
  model.add_constraint(std::move(snk));
  for (int k = 1; k < N; ++k) {
    Constraint pred{join("pred", {k}), {}, Sense::Equal, 1};
    for (int a = 0; a < N; ++a)
      if (a != k) pred.terms.push_back({x[a][k], 1});
    model.add_constraint(std::move(pred));
  }
  for (int j = 1; j < N; ++j) {
    Constraint succ{join("succ", {j}), {}, Sense::Equal, 1};
    for (int b = 0; b < N; ++b)
      if (b != j) succ.terms.push_back({x[j][b], 1});
    model.add_constraint(std::move(succ));
  }
  for (int j = 1; j < N; ++j)
    for (int k = 1; k < N; ++k) {
      if (j == k) continue;
      model.add_constraint(
          {join("seq", {j, k}), {{C[j], 1}, {C[k], -1}, {x[j][k], T}}, Sense::LessEqual, T - pprime(inst, k)});
    }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int j = edges[e].first + 1, k = edges[e].second + 1;
    model.add_constraint(
        {join("cb", {j, k}), {{C[j], 1}, {C[k], -1}, {yvar[e], T}}, Sense::LessEqual, T - pprime(inst, k)});
    model.add_constraint(
        {join("ca", {j, k}), {{C[j], 1}, {C[k], -1}, {yvar[e], T}}, Sense::GreaterEqual, pprime(inst, j)});
  }
  return model;
}

}  // namespace

MilpModel build_model(const Instance& inst, Formulation f, std::optional<Time> horizon) {
  const Time T = horizon.value_or(inst.total_processing());
  const Time need = minimum_horizon(inst);
  if (T < need) {
    throw ParameterError("horizon " + std::to_string(T) + " is below " + std::to_string(need) +
                         ", the larger of the longest job and the average machine load; no schedule fits");
  }
  MilpModel model;
  switch (f) {
    case Formulation::F1: model = build_f1(inst, T); break;
    case Formulation::F2: model = build_f2(inst, T); break;
    case Formulation::F3: model = build_f3(inst, T); break;
  }
  model.formulation = f;
  model.horizon = T;
  return model;
}

ModelCounts expected_counts(const Instance& inst, Formulation f, Time T) {
  const std::size_t n = inst.n(), m = inst.m(), E = inst.conflicts().edge_count();
  ModelCounts c;
  if (f == Formulation::F1) {
    for (std::size_t j = 0; j < n; ++j) c.binaries += m * static_cast<std::size_t>(std::max<Time>(0, T - inst.p(j) + 1));
    const bool busy = inst.max_processing() > 0;
    c.constraints = n + (busy ? m * T : 0) + E * T;
  } else if (f == Formulation::F2) {
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; b <= n; ++b) {
        if (a == b) continue;
        const Time len = T - pprime(inst, static_cast<int>(a)) - pprime(inst, static_cast<int>(b)) + 1;
        c.binaries += static_cast<std::size_t>(std::max<Time>(0, len));
      }
    c.binaries += E;
    c.constraints = 2 + 2 * n + 2 * E;
    for (std::size_t k = 0; k < n; ++k) c.constraints += static_cast<std::size_t>(T - inst.p(static_cast<int>(k)) + 1);
  } else {
    c.binaries = (n + 1) * n + E;
    c.continuous = n;
    c.constraints = 2 + 2 * n + n * (n - 1) + 2 * E;
  }
  return c;
}

namespace {

std::string sense_str(Sense s) {
  switch (s) {
    case Sense::LessEqual: return "<=";
    case Sense::Equal: return "=";
    case Sense::GreaterEqual: return ">=";
  }
  return "?";
}

std::string format_number(double v) {
  if (std::nearbyint(v) == v && std::fabs(v) < 1e15) return std::to_string(static_cast<std::int64_t>(v));
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class LineWriter {
 public:
  LineWriter(std::ostream& out, std::string head) : out_(out), line_(" " + std::move(head)) {}

  void token(const std::string& tok) {
    if (line_.size() + 1 + tok.size() > kWidth && line_.find_first_not_of(' ') != std::string::npos &&
        line_.size() > kIndent) {
      out_ << line_ << '\n';
      line_ = std::string(kIndent, ' ') + tok;
      return;
    }
    line_ += ' ';
    line_ += tok;
  }
  void finish() { out_ << line_ << '\n'; }

 private:
  static constexpr std::size_t kWidth = 78;
  static constexpr std::size_t kIndent = 3;
  std::ostream& out_;
  std::string line_;
};

void write_terms(LineWriter& w, const MilpModel& model, const std::vector<Term>& terms) {
  bool first = true;
  for (const Term& t : terms) {
    const std::string& name = model.variables[t.var].name;
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    std::string tok;
    if (first) tok = t.coef < 0 ? "-" : "";
    else tok = t.coef < 0 ? "- " : "+ ";
    if (mag != 1) tok += std::to_string(mag) + " ";
    tok += name;
    w.token(tok);
    first = false;
  }
}

}  // namespace

void write_lp(const MilpModel& model, std::ostream& out) {
  out << "\\ " << to_string(model.formulation) << ", horizon " << model.horizon << ", " << model.variables.size()
      << " variables, " << model.constraints.size() << " constraints\n";
  out << "Minimize\n";
  {
    LineWriter w(out, "obj:");
    if (model.objective.empty()) w.token("0");
    write_terms(w, model, model.objective);
    w.finish();
  }
  out << "Subject To\n";
  for (const Constraint& c : model.constraints) {
    LineWriter w(out, c.name + ":");
    write_terms(w, model, c.terms);
    w.token(sense_str(c.sense) + " " + std::to_string(c.rhs));
    w.finish();
  }
  bool any_bounds = false;
  for (const Variable& v : model.variables) {
    if (v.kind == VarKind::Binary) continue;
    if (v.lower == 0.0 && !v.upper) continue;
    if (!any_bounds) out << "Bounds\n";
    any_bounds = true;
    if (v.upper) out << " " << format_number(v.lower) << " <= " << v.name << " <= " << format_number(*v.upper) << '\n';
    else out << " " << v.name << " >= " << format_number(v.lower) << '\n';
  }
  std::vector<const std::string*> binaries;
  for (const Variable& v : model.variables)
    if (v.kind == VarKind::Binary) binaries.push_back(&v.name);
  if (!binaries.empty()) {
    out << "Binaries\n";
    LineWriter w(out, *binaries.front());
    for (std::size_t i = 1; i < binaries.size(); ++i) w.token(*binaries[i]);
    w.finish();
  }
  out << "End\n";
}

std::string format_lp(const MilpModel& model) {
  std::ostringstream os;
  write_lp(model, os);
  return os.str();
}

void export_lp(const MilpModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_lp(model, out);
  if (!out) throw Error("write failed: " + path);
}

namespace {

enum class Section { None, Objective, Constraints, Bounds, Binaries, Generals, End };

struct Token {
  std::string text;
  int line;
};

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Section> section_keyword(const std::string& line) {
  std::string s = lower_copy(line);
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  if (s == "minimize" || s == "minimum" || s == "min") return Section::Objective;
  if (s == "subject to" || s == "such that" || s == "st" || s == "s.t.") return Section::Constraints;
  if (s == "bounds" || s == "bound") return Section::Bounds;
  if (s == "binaries" || s == "binary" || s == "bin") return Section::Binaries;
  if (s == "generals" || s == "general" || s == "gen") return Section::Generals;
  if (s == "end") return Section::End;
  return std::nullopt;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' || c == ']' || c == '#' ||
         c == '$' || c == '{' || c == '}' || c == '!' || c == '"' || c == '\'' || c == '~' || c == '&' || c == '@' ||
         c == '?' || c == '^' || c == '(' || c == ')' || c == ',' || c == ';' || c == '/' || c == '|';
}

void tokenize(const std::string& line, int lineno, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t j = i + 1;
      while (j < line.size() && (line[j] == '=' || line[j] == '<' || line[j] == '>')) ++j;
      std::string op = line.substr(i, j - i);
      if (op == "=<") op = "<=";
      if (op == "=>") op = ">=";
      if (op == "<") op = "<=";
      if (op == ">") op = ">=";
      if (op != "<=" && op != ">=" && op != "=") throw ParseError("bad operator '" + op + "'", lineno);
      out.push_back({op, lineno});
      i = j;
    } else if (c == '+' || c == '-' || c == ':') {
      out.push_back({std::string(1, c), lineno});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
        if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          j = k;
          while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        }
      }
      out.push_back({line.substr(i, j - i), lineno});
      i = j;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), lineno});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", lineno);
    }
  }
}

bool is_number(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '.');
}

double to_double(const Token& t) {
  char* end = nullptr;
  const double v = std::strtod(t.text.c_str(), &end);
  if (end != t.text.c_str() + t.text.size()) throw ParseError("bad number '" + t.text + "'", t.line);
  return v;
}

bool is_op(const std::string& s) { return s == "<=" || s == ">=" || s == "="; }

Sense to_sense(const std::string& s) {
  if (s == "<=") return Sense::LessEqual;
  if (s == ">=") return Sense::GreaterEqual;
  return Sense::Equal;
}

class LpParser {
 public:
  explicit LpParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool done() const { return pos_ >= toks_.size(); }

  // [name ':'] then terms until an operator or the end.
  std::string label() {
    if (pos_ + 1 < toks_.size() && toks_[pos_ + 1].text == ":" && !is_number(toks_[pos_].text)) {
      std::string name = toks_[pos_].text;
      pos_ += 2;
      return name;
    }
    return {};
  }

  std::vector<std::pair<std::string, double>> terms() {
    std::vector<std::pair<std::string, double>> out;
    while (!done() && !is_op(peek().text)) {
      double sign = 1.0;
      bool explicit_sign = false;
      while (!done() && (peek().text == "+" || peek().text == "-")) {
        if (peek().text == "-") sign = -sign;
        explicit_sign = true;
        ++pos_;
      }
      if (done()) throw ParseError("expression ends after a sign", toks_.back().line);
      if (!explicit_sign && !out.empty()) throw ParseError("missing operator before '" + peek().text + "'", peek().line);
      double coef = 1.0;
      if (is_number(peek().text)) {
        coef = to_double(peek());
        ++pos_;
        if (done() || is_op(peek().text) || peek().text == "+" || peek().text == "-") {
          // A bare constant; only zero is meaningful here.
          if (coef != 0.0) throw ParseError("constant term in expression", toks_[pos_ - 1].line);
          continue;
        }
      }
      const Token& name = next();
      if (is_number(name.text) || name.text == ":") throw ParseError("expected a variable, got '" + name.text + "'", name.line);
      out.emplace_back(name.text, sign * coef);
    }
    return out;
  }

  LpFile::Row row() {
    LpFile::Row r;
    const int line = peek().line;
    r.name = label();
    r.terms = terms();
    if (done()) throw ParseError("constraint without a sense", line);
    r.sense = to_sense(next().text);
    r.rhs = signed_number();
    return r;
  }

  double signed_number() {
    double sign = 1.0;
    while (!done() && (peek().text == "+" || peek().text == "-")) {
      if (next().text == "-") sign = -sign;
    }
    if (done()) throw ParseError("missing right-hand side", toks_.back().line);
    const Token& t = next();
    const std::string l = lower_copy(t.text);
    if (l == "inf" || l == "infinity") return sign * HUGE_VAL;
    if (!is_number(t.text)) throw ParseError("expected a number, got '" + t.text + "'", t.line);
    return sign * to_double(t);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

LpFile parse_lp(std::istream& in) {
  LpFile lp;
  std::map<std::string, bool> seen;
  auto note = [&](const std::string& name) {
    if (seen.emplace(name, true).second) lp.variables.push_back(name);
  };
  std::vector<Token> objective, constraints;
  Section section = Section::None;
  std::string line;
  int lineno = 0;
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto cut = line.find('\\'); cut != std::string::npos) line.erase(cut);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto kw = section_keyword(line)) {
      section = *kw;
      if (section == Section::End) {
        ended = true;
        break;
      }
      continue;
    }
    switch (section) {
      case Section::None: throw ParseError("content before the objective section", lineno);
      case Section::Objective: tokenize(line, lineno, objective); break;
      case Section::Constraints: tokenize(line, lineno, constraints); break;
      case Section::Bounds: {
        std::vector<Token> toks;
        tokenize(line, lineno, toks);
        if (toks.size() == 2 && lower_copy(toks[1].text) == "free") {
          lp.lower_bounds[toks[0].text] = -HUGE_VAL;
          note(toks[0].text);
          break;
        }
        LpParser p(toks);
        std::string name;
        if (!is_number(toks[0].text) && toks[0].text != "-" && toks[0].text != "+") {
          name = p.next().text;
          if (p.done()) throw ParseError("incomplete bound", lineno);
          const std::string op = p.next().text;
          const double v = p.signed_number();
          if (op == ">=") lp.lower_bounds[name] = v;
          else if (op == "=") lp.lower_bounds[name] = v;
          else if (op != "<=") throw ParseError("bad bound operator", lineno);
        } else {
          const double lo = p.signed_number();
          if (p.done() || p.next().text != "<=") throw ParseError("bad bound", lineno);
          name = p.next().text;
          lp.lower_bounds[name] = lo;
          if (!p.done()) {
            if (p.next().text != "<=") throw ParseError("bad bound", lineno);
            p.signed_number();
          }
        }
        if (!p.done()) throw ParseError("trailing tokens in bound", lineno);
        note(name);
        break;
      }
      case Section::Binaries:
      case Section::Generals: {
        std::vector<Token> toks;
        tokenize(line, lineno, toks);
        for (const auto& t : toks) {
          if (section == Section::Binaries) lp.binaries.push_back(t.text);
          note(t.text);
        }
        break;
      }
      case Section::End: break;
    }
  }
  if (!ended) throw ParseError("missing End", lineno);

  LpParser obj(std::move(objective));
  if (!obj.done()) {
    obj.label();
    lp.objective = obj.terms();
    if (!obj.done()) throw ParseError("operator in objective", obj.peek().line);
  }
  for (const auto& [name, coef] : lp.objective) note(name);
  LpParser rows(std::move(constraints));
  while (!rows.done()) {
    lp.rows.push_back(rows.row());
    for (const auto& [name, coef] : lp.rows.back().terms) note(name);
  }
  return lp;
}

LpFile read_lp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_lp(in);
}

AssignmentCheck check_assignment(const MilpModel& model, const Assignment& values) {
  constexpr double tol = 1e-6;
  AssignmentCheck r;
  std::vector<double> x(model.variables.size(), 0.0);
  for (const auto& [name, v] : values) {
    const auto id = model.find(name);
    if (!id) {
      r.violation = "unknown variable " + name;
      return r;
    }
    x[*id] = v;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Variable& var = model.variables[i];
    if (x[i] < var.lower - tol || (var.upper && x[i] > *var.upper + tol)) {
      r.violation = "bound of " + var.name;
      return r;
    }
    if (var.kind == VarKind::Binary && !(std::fabs(x[i]) <= tol || std::fabs(x[i] - 1.0) <= tol)) {
      r.violation = "integrality of " + var.name;
      return r;
    }
  }
  for (const Constraint& c : model.constraints) {
    double lhs = 0.0;
    for (const Term& t : c.terms) lhs += static_cast<double>(t.coef) * x[t.var];
    const double rhs = static_cast<double>(c.rhs);
    const bool ok = c.sense == Sense::LessEqual ? lhs <= rhs + tol
                    : c.sense == Sense::GreaterEqual ? lhs >= rhs - tol
                                                     : std::fabs(lhs - rhs) <= tol;
    if (!ok) {
      r.violation = "constraint " + c.name;
      return r;
    }
  }
  for (const Term& t : model.objective) r.objective += static_cast<double>(t.coef) * x[t.var];
  r.feasible = true;
  return r;
}

Assignment schedule_assignment(const Instance& inst, const MilpModel& model, const Schedule& sched) {
  if (sched.size() != inst.n()) throw StructuralError("schedule length does not match the instance");
  const int n = inst.n();
  Assignment a;
  if (model.formulation == Formulation::F1) {
    for (int j = 0; j < n; ++j) a[join("x", {sched.machine_of[j] + 1, j + 1, sched.start_of[j]})] = 1.0;
    return a;
  }
  std::vector<std::vector<JobId>> chains(inst.m());
  for (int j = 0; j < n; ++j) {
    const MachineId i = sched.machine_of[j];
    if (i < 0 || i >= inst.m()) throw StructuralError("machine index out of range");
    chains[i].push_back(j);
  }
  for (auto& chain : chains) {
    std::sort(chain.begin(), chain.end(), [&](JobId u, JobId v) {
      const auto ku = std::tuple(sched.start_of[u], sched.completion(inst, u), u);
      const auto kv = std::tuple(sched.start_of[v], sched.completion(inst, v), v);
      return ku < kv;
    });
    if (chain.empty()) continue;
    int prev = 0;
    for (JobId j : chain) {
      if (model.formulation == Formulation::F2) a[join("xp", {prev, j + 1, sched.start_of[j]})] = 1.0;
      else a[join("x", {prev, j + 1})] = 1.0;
      prev = j + 1;
    }
    const JobId last = chain.back();
    if (model.formulation == Formulation::F2) a[join("xp", {prev, 0, sched.completion(inst, last)})] = 1.0;
    else a[join("x", {prev, 0})] = 1.0;
  }
  for (auto [j, k] : inst.conflicts().edges())
    a[join("y", {j + 1, k + 1})] = sched.completion(inst, j) <= sched.start_of[k] ? 1.0 : 0.0;
  if (model.formulation == Formulation::F3)
    for (int j = 0; j < n; ++j) a[join("C", {j + 1})] = static_cast<double>(sched.completion(inst, j));
  return a;
}

WarmStart warm_start(const Instance& inst, const MilpModel& model) {
  WarmStart ws;
  auto decoded = decode(inst, identity_permutation(inst.n()), Decoder::Ectf);
  ws.schedule = std::move(decoded.schedule);
  ws.value = decoded.total;
  ws.values = schedule_assignment(inst, model, ws.schedule);
  return ws;
}

void write_start(const MilpModel& model, const WarmStart& ws, std::ostream& out) {
  out << "# warm start for " << to_string(model.formulation) << ", horizon " << model.horizon << ", objective "
      << ws.value << '\n';
  auto value_of = [&](const std::string& name) {
    auto it = ws.values.find(name);
    return it == ws.values.end() ? 0.0 : it->second;
  };
  auto family = [&](const char* title, auto keep) {
    bool header = false;
    for (const Variable& v : model.variables) {
      const double val = value_of(v.name);
      if (!keep(v.name, val)) continue;
      if (!header) out << "# " << title << '\n';
      header = true;
      out << v.name << ' ' << format_number(val) << '\n';
    }
  };
  family("x", [](const std::string& name, double v) { return name[0] == 'x' && v != 0.0; });
  family("y", [](const std::string& name, double) { return name[0] == 'y'; });
  family("C", [](const std::string& name, double) { return name[0] == 'C'; });
}

Assignment parse_start(std::istream& in) {
  Assignment a;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto cut = line.find('#'); cut != std::string::npos) line.erase(cut);
    std::istringstream ls(line);
    std::string name, value, extra;
    if (!(ls >> name)) continue;
    if (!(ls >> value) || (ls >> extra)) throw ParseError("expected 'name value'", lineno);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size()) throw ParseError("bad value '" + value + "'", lineno);
    a[name] = v;
  }
  return a;
}

SolverResult parse_solver_result(std::istream& in) {
  SolverResult r;
  bool have_status = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto cut = line.find('#'); cut != std::string::npos) line.erase(cut);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw ParseError("expected key=value, got '" + tok + "'", lineno);
      const std::string key = lower_copy(tok.substr(0, eq));
      const std::string value = tok.substr(eq + 1);
      auto number = [&] {
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size() || std::isnan(v))
          throw ParseError("bad number for " + key + ": '" + value + "'", lineno);
        return v;
      };
      if (key == "status") {
        r.status = lower_copy(value);
        have_status = true;
      } else if (key == "objective") {
        r.objective = number();
      } else if (key == "bound") {
        r.bound = number();
      }
    }
  }
  if (!have_status) throw ParseError("missing status");
  return r;
}

SolverResult ingest_solver_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_solver_result(in);
}

}  // namespace confsched
