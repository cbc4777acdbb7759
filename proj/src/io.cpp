#include "pdnf/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "pdnf/error.hpp"
#include "pdnf/transform.hpp"

namespace pdnf {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long parse_int(std::string_view s, std::size_t line, std::string_view dir, const std::string& field) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(line, std::string(dir) + ": field '" + field + "': expected an integer, got '" + std::string(s) + "'");
  return v;
}

Scalar parse_coeff(std::string_view s, std::size_t line, std::string_view dir, const std::string& field) {
  try {
    return parse_scalar(s);
  } catch (const Error& e) {
    fail(line, std::string(dir) + ": field '" + field + "': " + e.what());
  }
}

std::vector<int> parse_exps(std::string_view s, std::size_t count, std::size_t line, std::string_view dir, const std::string& field) {
  std::vector<int> out;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string_view part = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      const long v = parse_int(part, line, dir, field);
      if (v < 0 || v > 255) fail(line, std::string(dir) + ": field '" + field + "': exponent " + std::to_string(v) + " outside [0,255]");
      out.push_back(static_cast<int>(v));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (out.size() != count)
    fail(line, std::string(dir) + ": field '" + field + "': expected " + std::to_string(count) + " exponents, got " +
                   std::to_string(out.size()));
  return out;
}

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_kv(const Line& l, const std::vector<std::string>& keys) {
  KeyValues kv;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    const std::string& t = l.tokens[i];
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(l.number, l.tokens[0] + ": expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      fail(l.number, l.tokens[0] + ": unknown field '" + key + "'");
    if (!kv.emplace(key, t.substr(eq + 1)).second) fail(l.number, l.tokens[0] + ": duplicate field '" + key + "'");
  }
  for (const auto& k : keys)
    if (!kv.count(k)) fail(l.number, l.tokens[0] + ": missing field '" + k + "'");
  return kv;
}

std::size_t parse_index(const std::string& s, std::size_t limit, std::size_t line, std::string_view dir, const std::string& field) {
  const long v = parse_int(s, line, dir, field);
  if (v < 1 || static_cast<std::size_t>(v) > limit)
    fail(line, std::string(dir) + ": field '" + field + "': index " + std::to_string(v) + " outside 1.." + std::to_string(limit));
  return static_cast<std::size_t>(v - 1);
}

std::string join_exps(const Monomial& m, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ",";
    out += std::to_string(m[i]);
  }
  return out;
}

// Shared header state.
struct Header {
  std::optional<std::size_t> dim;
  std::vector<std::string> vars;
  std::optional<std::vector<std::string>> params;
  std::optional<int> order;
};

// Handles format/dim/vars/params/order; returns false for other directives.
bool header_line(const Line& l, Header& h) {
  const std::string& d = l.tokens[0];
  if (d == "format") {
    if (l.tokens.size() != 3 || l.tokens[1] != "pdnf" || l.tokens[2] != "1")
      fail(l.number, "format: expected 'format pdnf 1'");
    return true;
  }
  if (d == "dim") {
    if (h.dim) fail(l.number, "dim: given twice");
    if (l.tokens.size() != 2) fail(l.number, "dim: expected one value");
    const long n = parse_int(l.tokens[1], l.number, l.tokens[0], "dim");
    if (n < 1 || n > static_cast<long>(Monomial::kMaxVars))
      fail(l.number, "dim: must lie in 1.." + std::to_string(Monomial::kMaxVars));
    h.dim = static_cast<std::size_t>(n);
    return true;
  }
  if (d == "vars") {
    h.vars.assign(l.tokens.begin() + 1, l.tokens.end());
    return true;
  }
  if (d == "params") {
    h.params = std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end());
    return true;
  }
  if (d == "order") {
    if (l.tokens.size() != 2) fail(l.number, "order: expected one value");
    const long o = parse_int(l.tokens[1], l.number, l.tokens[0], "order");
    if (o < 1 || o > 255) fail(l.number, "order: must lie in 1..255");
    h.order = static_cast<int>(o);
    return true;
  }
  return false;
}

std::size_t require_dim(const Header& h, const Line& l) {
  if (!h.dim) fail(l.number, l.tokens[0] + ": 'dim' must come first");
  return *h.dim;
}

}  // namespace

FieldFile parse_field_file(std::string_view text) {
  const auto lines = tokenize(text);
  Header h;
  struct RawTerm {
    std::size_t comp;
    Scalar coeff;
    std::vector<int> exps;
    std::size_t line;
  };
  std::vector<RawTerm> terms;
  std::optional<Matrix> matrix;
  std::size_t vars_line = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens[0] == "vars") vars_line = l.number;
    if (header_line(l, h)) {
      if (h.params) fail(l.number, "params: not allowed in a field file (use a family file)");
      continue;
    }
    const std::string& d = l.tokens[0];
    const std::size_t n = require_dim(h, l);
    if (d == "eigenvalues") {
      if (l.tokens.size() != n + 1)
        fail(l.number, "eigenvalues: expected " + std::to_string(n) + " values, got " + std::to_string(l.tokens.size() - 1));
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        terms.push_back({j, parse_coeff(l.tokens[j + 1], l.number, l.tokens[0], "eigenvalue " + std::to_string(j + 1)), e,
                         l.number});
      }
    } else if (d == "term") {
      const auto kv = parse_kv(l, {"comp", "coeff", "exps"});
      const std::size_t comp = parse_index(kv.at("comp"), n, l.number, l.tokens[0], "comp");
      auto exps = parse_exps(kv.at("exps"), n, l.number, l.tokens[0], "exps");
      int deg = 0;
      for (int e : exps) deg += e;
      if (deg == 0) fail(l.number, "term: constant terms are not allowed (the origin must be stationary)");
      terms.push_back({comp, parse_coeff(kv.at("coeff"), l.number, l.tokens[0], "coeff"), std::move(exps), l.number});
    } else if (d == "linear_matrix") {
      if (matrix) fail(l.number, "linear_matrix: given twice");
      if (l.tokens.size() != 1) fail(l.number, "linear_matrix: the rows follow on separate lines");
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        if (++li >= lines.size()) fail(l.number, "linear_matrix: missing rows before end of file");
        const Line& row = lines[li];
        if (row.tokens.size() != n)
          fail(row.number, "linear_matrix: expected " + std::to_string(n) + " entries, got " + std::to_string(row.tokens.size()));
        for (std::size_t c = 0; c < n; ++c)
          m(r, c) = parse_coeff(row.tokens[c], row.number, "linear_matrix", "linear_matrix[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]");
      }
      if (++li >= lines.size() || lines[li].tokens.size() != 1 || lines[li].tokens[0] != "end")
        fail(li < lines.size() ? lines[li].number : l.number, "linear_matrix: expected 'end'");
      if (!inverse(m)) fail(l.number, "linear_matrix: matrix is singular");
      matrix = std::move(m);
    } else if (d == "a_entry" || d == "f_term") {
      fail(l.number, d + ": only allowed in a family file");
    } else {
      fail(l.number, "unknown directive '" + d + "'");
    }
  }
  if (!h.dim) throw Error(ErrorCode::parse_error, "line 1: missing 'dim'");
  const std::size_t n = *h.dim;
  if (h.vars.empty()) h.vars = default_var_names(n);
  if (h.vars.size() != n)
    fail(vars_line, "vars: expected " + std::to_string(n) + " names, got " + std::to_string(h.vars.size()));

  int max_deg = 1;
  for (const auto& t : terms) {
    int deg = 0;
    for (int e : t.exps) deg += e;
    if (h.order && deg > *h.order)
      fail(t.line, "term: degree " + std::to_string(deg) + " exceeds order " + std::to_string(*h.order));
    max_deg = std::max(max_deg, deg);
  }
  FieldFile out;
  out.vars = h.vars;
  out.exact = !h.order.has_value();
  out.field = PolyVectorField(n, h.order.value_or(max_deg));
  for (const auto& t : terms) out.field.add_term(t.comp, Monomial(std::span<const int>(t.exps)), t.coeff);
  out.linear_matrix = std::move(matrix);
  return out;
}

PolyVectorField FieldFile::prepared(int order) const {
  PolyVectorField f;
  if (exact) {
    f = field.retagged(order);
  } else {
    if (order > field.order())
      throw Error(ErrorCode::order_exceeds_input, "requested order " + std::to_string(order) +
                                                      " exceeds the file's truncation order " +
                                                      std::to_string(field.order()));
    f = field.truncated(order);
  }
  if (linear_matrix) f = linear_conjugate(*linear_matrix, f);
  return f;
}

FieldFile make_field_file(const PolyVectorField& f, bool exact) {
  FieldFile out;
  out.vars = default_var_names(f.dim());
  out.field = f;
  out.exact = exact;
  return out;
}

std::string serialize_field_file(const FieldFile& file) {
  const PolyVectorField& f = file.field;
  const std::size_t n = f.dim();
  std::ostringstream os;
  os << "format pdnf 1\n";
  os << "dim " << n << "\n";
  os << "vars";
  for (const auto& v : file.vars) os << " " << v;
  os << "\n";
  if (!file.exact) os << "order " << f.order() << "\n";
  const bool diagonal = f.linear_part().is_diagonal();
  if (diagonal) {
    os << "eigenvalues";
    for (const auto& l : f.linear_part().diagonal_entries()) os << " " << to_string(l);
    os << "\n";
  }
  for (std::size_t j = 0; j < n; ++j)
    f[j].for_each([&](const Monomial& m, const Scalar& c) {
      if (diagonal && m.degree() == 1) return;
      os << "term comp=" << (j + 1) << " coeff=" << to_string(c) << " exps=" << join_exps(m, 0, n) << "\n";
    });
  if (file.linear_matrix) {
    os << "linear_matrix\n";
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) os << (c ? " " : "") << to_string((*file.linear_matrix)(r, c));
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

ParamFamily parse_family_file(std::string_view text) {
  const auto lines = tokenize(text);
  Header h;
  struct RawA {
    std::size_t row, col;
    Scalar coeff;
    std::vector<int> exps;
  };
  struct RawF {
    std::size_t comp;
    Scalar coeff;
    std::vector<int> exps;
    std::size_t line;
  };
  std::vector<RawA> as;
  std::vector<RawF> fs;
  std::size_t vars_line = 0;

  for (const Line& l : lines) {
    if (l.tokens[0] == "vars") vars_line = l.number;
    if (header_line(l, h)) continue;
    const std::string& d = l.tokens[0];
    const std::size_t n = require_dim(h, l);
    if (!h.params) fail(l.number, d + ": 'params' must come before family terms");
    const std::size_t p = h.params->size();
    if (d == "a_entry") {
      const auto kv = parse_kv(l, {"row", "col", "coeff", "exps"});
      as.push_back({parse_index(kv.at("row"), n, l.number, l.tokens[0], "row"), parse_index(kv.at("col"), n, l.number, l.tokens[0], "col"),
                    parse_coeff(kv.at("coeff"), l.number, l.tokens[0], "coeff"), parse_exps(kv.at("exps"), p, l.number, l.tokens[0], "exps")});
    } else if (d == "f_term") {
      const auto kv = parse_kv(l, {"comp", "coeff", "xexps", "pexps"});
      auto x = parse_exps(kv.at("xexps"), n, l.number, l.tokens[0], "xexps");
      auto pe = parse_exps(kv.at("pexps"), p, l.number, l.tokens[0], "pexps");
      int xdeg = 0;
      for (int e : x) xdeg += e;
      if (xdeg < 2) fail(l.number, "f_term: x-degree must be >= 2 (x-linear terms go in a_entry lines)");
      x.insert(x.end(), pe.begin(), pe.end());
      fs.push_back({parse_index(kv.at("comp"), n, l.number, l.tokens[0], "comp"), parse_coeff(kv.at("coeff"), l.number, l.tokens[0], "coeff"),
                    std::move(x), l.number});
    } else if (d == "eigenvalues" || d == "term" || d == "linear_matrix") {
      fail(l.number, d + ": only allowed in a field file");
    } else {
      fail(l.number, "unknown directive '" + d + "'");
    }
  }
  if (!h.dim) throw Error(ErrorCode::parse_error, "line 1: missing 'dim'");
  if (!h.params) throw Error(ErrorCode::parse_error, "line 1: missing 'params' (a family file needs it)");
  const std::size_t n = *h.dim, p = h.params->size();
  if (n + p > Monomial::kMaxVars) throw Error(ErrorCode::parse_error, "line 1: dim + params exceeds 16 variables");

  ParamFamily fam(n, p, h.order.value_or(3));
  if (!h.vars.empty()) {
    if (h.vars.size() != n)
      fail(vars_line, "vars: expected " + std::to_string(n) + " names, got " + std::to_string(h.vars.size()));
    fam.state_names = h.vars;
  }
  fam.param_names = *h.params;
  for (const auto& a : as) fam.a_entries[a.row][a.col].add_term(Monomial(std::span<const int>(a.exps)), a.coeff);
  for (const auto& f : fs) {
    Monomial m{std::span<const int>(f.exps)};
    if (m.degree() > fam.order)
      fail(f.line, "f_term: total degree " + std::to_string(m.degree()) + " exceeds order " + std::to_string(fam.order));
    fam.f_terms[f.comp].add_term(m, f.coeff);
  }
  try {
    fam.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, std::string("family: ") + e.what());
  }
  return fam;
}

std::string serialize_family_file(const ParamFamily& fam) {
  std::ostringstream os;
  os << "format pdnf 1\n";
  os << "dim " << fam.n << "\n";
  os << "vars";
  for (const auto& v : fam.state_names) os << " " << v;
  os << "\nparams";
  for (const auto& v : fam.param_names) os << " " << v;
  os << "\norder " << fam.order << "\n";
  for (std::size_t i = 0; i < fam.n; ++i)
    for (std::size_t j = 0; j < fam.n; ++j)
      fam.a_entries[i][j].for_each([&](const Monomial& m, const Scalar& c) {
        os << "a_entry row=" << (i + 1) << " col=" << (j + 1) << " coeff=" << to_string(c)
           << " exps=" << join_exps(m, 0, fam.p) << "\n";
      });
  for (std::size_t i = 0; i < fam.n; ++i)
    fam.f_terms[i].for_each([&](const Monomial& m, const Scalar& c) {
      os << "f_term comp=" << (i + 1) << " coeff=" << to_string(c) << " xexps=" << join_exps(m, 0, fam.n)
         << " pexps=" << join_exps(m, fam.n, fam.n + fam.p) << "\n";
    });
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

}  // namespace pdnf
