#include "cayley/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cayley {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

namespace {

struct Line {
  int no;
  std::string text;  // comment stripped
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string s;
  int no = 0;
  while (std::getline(in, s)) {
    ++no;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    auto h = s.find('#');
    if (h != std::string::npos) s.erase(h);
    bool blank = true;
    for (char c : s) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back({no, s});
  }
  return out;
}

class Cursor {
 public:
  Cursor(const Line& l) : line_(l) {}

  void skip_ws() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  char peek() {
    skip_ws();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < line_.text.size() && (std::isalnum(static_cast<unsigned char>(line_.text[pos_])) ||
                                         line_.text[pos_] == '_' || line_.text[pos_] == '-'))
      ++pos_;
    return line_.text.substr(b, pos_ - b);
  }
  long integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    if (pos_ - b > 9) fail("number too large");
    return std::stol(line_.text.substr(b, pos_ - b));
  }
  mpq_class rational() {
    skip_ws();
    std::size_t b = pos_;
    std::string s;
    if (pos_ < line_.text.size() && (line_.text[pos_] == '-' || line_.text[pos_] == '+')) {
      if (line_.text[pos_] == '-') s += '-';
      ++pos_;
    }
    std::size_t d = pos_;
    while (pos_ < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[pos_]))) s += line_.text[pos_++];
    if (d == pos_) fail_at(b, "expected a rational");
    if (pos_ < line_.text.size() && line_.text[pos_] == '/') {
      s += line_.text[pos_++];
      std::size_t q = pos_;
      while (pos_ < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[pos_])))
        s += line_.text[pos_++];
      if (q == pos_) fail_at(q, "expected a denominator");
      bool zero = true;
      for (std::size_t k = q; k < pos_; ++k) zero = zero && line_.text[k] == '0';
      if (zero) fail_at(q, "zero denominator");
    }
    mpq_class r(s, 10);
    r.canonicalize();
    return r;
  }
  Scalar quadruple() {
    expect('[');
    mpq_class v[4];
    for (int k = 0; k < 4; ++k) {
      if (k) expect(',');
      v[k] = rational();
    }
    expect(']');
    return Scalar(v[0], v[1], v[2], v[3]);
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) {
    throw ParseError(line_.no, static_cast<int>(p) + 1, msg);
  }
  std::size_t pos() const { return pos_; }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

// "name key=value ..." header; returns the key/value pairs
std::vector<std::pair<std::string, std::string>> header(const Line& l, const std::string& name) {
  std::vector<std::pair<std::string, std::string>> kv;
  const std::string& t = l.text;
  std::size_t p = 0;
  bool first = true;
  while (true) {
    while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
    if (p >= t.size()) break;
    std::size_t b = p;
    while (p < t.size() && !std::isspace(static_cast<unsigned char>(t[p]))) ++p;
    std::string tok = t.substr(b, p - b);
    if (first) {
      if (tok != name) throw ParseError(l.no, static_cast<int>(b) + 1, "expected '" + name + "' header");
      first = false;
      continue;
    }
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError(l.no, static_cast<int>(b) + 1, "expected key=value");
    kv.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
  }
  return kv;
}

int int_value(const Line& l, const std::string& v, const std::string& key) {
  if (v.empty() || v.size() > 3) throw ParseError(l.no, 1, "bad value for " + key);
  for (char c : v)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(l.no, 1, "bad value for " + key);
  return std::stoi(v);
}

bool is_header(const Line& l, const std::string& name) {
  Cursor c(l);
  return c.word() == name;
}

Form parse_section(const std::vector<Line>& lines, std::size_t& i, const ParseOptions& opt) {
  const Line& h = lines[i];
  int dim = -1, grade = -1;
  for (auto& [k, v] : header(h, "form")) {
    if (k == "dim") dim = int_value(h, v, k);
    else if (k == "grade") grade = int_value(h, v, k);
    else throw ParseError(h.no, 1, "unknown header key '" + k + "'");
  }
  if (dim < 1 || dim > 16) throw ParseError(h.no, 1, "dim must be in 1..16");
  if (grade < 0 || grade > dim) throw ParseError(h.no, 1, "grade must be in 0..dim");
  Form f(dim, grade);
  for (++i; i < lines.size() && !is_header(lines[i], "form"); ++i) {
    Cursor c(lines[i]);
    Scalar s = c.quadruple();
    std::vector<int> idx;
    std::size_t start = c.pos();
    if (!c.done()) {
      do {
        if (c.peek() != 'e') c.fail("expected basis element e<k>");
        c.expect('e');
        long k = c.integer();
        if (k >= dim) c.fail("index " + std::to_string(k) + " outside dim " + std::to_string(dim));
        idx.push_back(static_cast<int>(k));
      } while (c.accept('^'));
      if (!c.done()) c.fail("unexpected trailing text");
    }
    if (static_cast<int>(idx.size()) != grade)
      c.fail_at(start, "term has " + std::to_string(idx.size()) + " indices, header says grade " +
                           std::to_string(grade));
    bool repeated = false;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) repeated = repeated || idx[a] == idx[b];
    if (repeated) {
      if (!opt.normalize) c.fail_at(start, "repeated index in term");
      continue;  // the term vanishes
    }
    f += Form::basis(dim, idx, s);
  }
  return f;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Line l{1, text};
  Cursor c(l);
  Scalar s = c.quadruple();
  if (!c.done()) c.fail("unexpected trailing text");
  return s;
}

std::string serialize_scalar(const Scalar& s) {
  return "[" + s.a().get_str() + "," + s.b().get_str() + "," + s.c().get_str() + "," + s.d().get_str() + "]";
}

std::vector<Form> parse_forms(const std::string& text, const ParseOptions& opt) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  std::vector<Form> out;
  std::size_t i = 0;
  while (i < lines.size()) out.push_back(parse_section(lines, i, opt));
  return out;
}

Form parse_form(const std::string& text, const ParseOptions& opt) {
  auto fs = parse_forms(text, opt);
  if (fs.size() != 1) throw ParseError(1, 1, "expected exactly one form section");
  return fs[0];
}

std::string serialize_form(const Form& f) {
  std::ostringstream os;
  os << "form dim=" << f.dim() << " grade=" << f.grade() << "\n";
  for (const auto& [m, c] : f.terms()) {
    os << serialize_scalar(c);
    auto idx = mask_indices(m);
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "^e" : " e") << idx[k];
    os << "\n";
  }
  return os.str();
}

Spinor parse_spinor(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  Spinor s;
  bool have = false;
  for (auto& [k, v] : header(lines[0], "spinor")) {
    if (k != "sig") throw ParseError(lines[0].no, 1, "unknown header key '" + k + "'");
    if (v == "8,0") s.sig = Signature::Euclid;
    else if (v == "4,4") s.sig = Signature::Split;
    else throw ParseError(lines[0].no, 1, "sig must be 8,0 or 4,4");
    have = true;
  }
  if (!have) throw ParseError(lines[0].no, 1, "missing sig");
  int n = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Cursor c(lines[i]);
    while (!c.done()) {
      if (n == 16) c.fail("more than 16 components");
      s.c[n++] = c.quadruple();
    }
  }
  if (n != 16) throw ParseError(lines.back().no, 1, "expected 16 components, got " + std::to_string(n));
  return s;
}

std::string serialize_spinor(const Spinor& s) {
  std::ostringstream os;
  os << "spinor sig=" << (s.sig == Signature::Euclid ? "8,0" : "4,4") << "\n";
  for (const auto& c : s.c) os << serialize_scalar(c) << "\n";
  return os.str();
}

SMat parse_metric(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  int n = -1;
  for (auto& [k, v] : header(lines[0], "metric")) {
    if (k != "dim") throw ParseError(lines[0].no, 1, "unknown header key '" + k + "'");
    n = int_value(lines[0], v, k);
  }
  if (n < 1 || n > 16) throw ParseError(lines[0].no, 1, "dim must be in 1..16");
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(lines.back().no, 1, "expected " + std::to_string(n) + " rows");
  SMat g(n, n);
  for (int r = 0; r < n; ++r) {
    Cursor c(lines[r + 1]);
    for (int k = 0; k < n; ++k) g(r, k) = c.quadruple();
    if (!c.done()) c.fail("too many entries in row");
  }
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < r; ++k)
      if (!(g(r, k) == g(k, r))) throw ParseError(lines[r + 1].no, 1, "metric is not symmetric");
  return g;
}

std::string serialize_metric(const SMat& g) {
  std::ostringstream os;
  os << "metric dim=" << g.rows() << "\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t k = 0; k < g.cols(); ++k) os << (k ? " " : "") << serialize_scalar(g(r, k));
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Form random_form(std::mt19937_64& rng, int dim, int grade, int terms) {
  std::uniform_int_distribution<int> idx(0, dim - 1), num(-9, 9), den(1, 7), zero(0, 2);
  auto q = [&] {
    if (zero(rng) == 0) return mpq_class(0);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  Form f(dim, grade);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> ix;
    while (static_cast<int>(ix.size()) < grade) {
      int k = idx(rng);
      bool dup = false;
      for (int x : ix) dup = dup || x == k;
      if (!dup) ix.push_back(k);
    }
    f += Form::basis(dim, ix, Scalar(q(), q(), q(), q()));
  }
  return f;
}

}  // namespace cayley
