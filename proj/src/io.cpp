#include "vl/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vl/catalog.hpp"
#include "vl/error.hpp"

namespace vl {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string text;
    int n = 0;
    while (std::getline(in, text)) {
      ++n;
      if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
      std::istringstream ss(text);
      Line l{n, {}};
      for (std::string t; ss >> t;) l.tokens.push_back(t);
      if (!l.tokens.empty()) lines_.push_back(std::move(l));
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() {
    if (done()) throw ParseError(source_, last_line(), "unexpected end of input");
    return lines_[pos_++];
  }
  int last_line() const { return lines_.empty() ? 0 : lines_[std::min(pos_, lines_.size() - 1)].number; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const Line& l, const std::string& what) const { throw ParseError(source_, l.number, what); }

  long long integer(const Line& l, const std::string& tok) const {
    long long v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail(l, "expected an integer, got '" + tok + "'");
    return v;
  }
  Index index(const Line& l, const std::string& tok, Index n) const {
    const long long v = integer(l, tok);
    if (v < 0 || v >= n) fail(l, "index " + tok + " out of range [0," + std::to_string(n) + ")");
    return static_cast<Index>(v);
  }
  FieldElement scalar(const Line& l, const std::string& tok, const FieldSpec& f) const {
    try {
      return FieldElement::parse(f, tok);
    } catch (const std::exception& e) {
      fail(l, e.what());
    }
  }
  FieldSpec field(const Line& l, const std::string& tok) const {
    try {
      return FieldSpec::parse(tok);
    } catch (const std::exception& e) {
      fail(l, e.what());
    }
  }
  Vector row(const Line& l, std::size_t first, Index n, const FieldSpec& f) const {
    if (l.tokens.size() - first != static_cast<std::size_t>(n))
      fail(l, "expected " + std::to_string(n) + " entries, got " + std::to_string(l.tokens.size() - first));
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = scalar(l, l.tokens[first + static_cast<std::size_t>(i)], f);
    return v;
  }
  void arity(const Line& l, std::size_t count) const {
    if (l.tokens.size() != count)
      fail(l, "'" + l.tokens[0] + "' takes " + std::to_string(count - 1) + " arguments");
  }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Matrix read_rows(Reader& r, Index rows, Index cols, const FieldSpec& f) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Line& l = r.next();
    m.row(i) = r.row(l, 0, cols, f).transpose();
  }
  return m;
}

// Wraps module errors with the source name; parse errors pass through.
template <class F>
auto annotated(const std::string& source, F&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidStructure& e) {
    throw InvalidStructure(source + ": " + e.what());
  }
}

HopfFile parse_all(std::istream& in, const std::string& source, bool allow_hopf) {
  Reader r(in, source);
  if (r.done()) throw ParseError(source, 0, "empty input");
  const Line& head = r.next();
  if (head.tokens[0] != "algebra") r.fail(head, "expected 'algebra <field> <dim>'");
  r.arity(head, 3);
  const FieldSpec f = r.field(head, head.tokens[1]);
  const long long dim = r.integer(head, head.tokens[2]);
  if (dim < 1) r.fail(head, "dimension must be positive");
  const Index n = static_cast<Index>(dim);

  std::vector<StructureTerm> terms;
  std::optional<Vector> unit, form, counit, ribbon;
  std::optional<Matrix> antipode;
  std::vector<HopfAlgebra::CoproductTerm> delta;
  std::optional<Tensor> rmat;
  while (!r.done()) {
    const Line& l = r.next();
    const std::string& kw = l.tokens[0];
    const bool hopf_kw = kw == "coproduct" || kw == "counit" || kw == "antipode" || kw == "R" || kw == "ribbon";
    if (hopf_kw && !allow_hopf) r.fail(l, "'" + kw + "' is only allowed in Hopf files");
    if (kw == "product" || is_integer_token(kw)) {
      const std::size_t o = kw == "product" ? 1 : 0;
      r.arity(l, o + 4);
      terms.push_back({r.index(l, l.tokens[o], n), r.index(l, l.tokens[o + 1], n), r.index(l, l.tokens[o + 2], n),
                       r.scalar(l, l.tokens[o + 3], f)});
    } else if (kw == "unit") {
      unit = r.row(l, 1, n, f);
    } else if (kw == "form") {
      form = r.row(l, 1, n, f);
    } else if (kw == "coproduct") {
      r.arity(l, 5);
      delta.push_back({r.index(l, l.tokens[1], n), r.index(l, l.tokens[2], n), r.index(l, l.tokens[3], n),
                       r.scalar(l, l.tokens[4], f)});
    } else if (kw == "counit") {
      counit = r.row(l, 1, n, f);
    } else if (kw == "antipode") {
      r.arity(l, 1);
      antipode = read_rows(r, n, n, f);
    } else if (kw == "R") {
      r.arity(l, 4);
      if (!rmat) rmat.emplace(f, n, 2);
      rmat->add({r.index(l, l.tokens[1], n), r.index(l, l.tokens[2], n)}, r.scalar(l, l.tokens[3], f));
    } else if (kw == "ribbon") {
      ribbon = r.row(l, 1, n, f);
    } else {
      r.fail(l, "unknown record '" + kw + "'");
    }
  }
  if (!unit) throw ParseError(source, r.last_line(), "missing 'unit' line");
  HopfFile out;
  out.algebra = annotated(source, [&] { return make_algebra(f, n, terms, *unit); });
  out.form = form;
  if (allow_hopf) {
    if (!counit || !antipode || delta.empty())
      throw ParseError(source, r.last_line(), "Hopf file needs coproduct, counit and antipode records");
    out.hopf.emplace(annotated(source, [&] { return HopfAlgebra(out.algebra, delta, *counit, *antipode, source); }));
    out.r = rmat;
    out.ribbon = ribbon;
    if (ribbon && !rmat) throw ParseError(source, r.last_line(), "'ribbon' needs an R-matrix");
  }
  return out;
}

std::string scalar_text(const FieldElement& x) {
  std::string s = x.to_string();
  if (s.find(' ') == std::string::npos) return s;
  // space-free coefficient tuple
  std::string t = "(";
  const auto c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) t += (i ? "," : "") + c[i].get_str();
  return t + ")";
}

std::string join(const Vector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v(i));
  return s;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return in;
}

}  // namespace

AlgebraFile parse_algebra(std::istream& in, const std::string& source) {
  auto h = parse_all(in, source, false);
  return {h.algebra, h.form};
}

HopfFile parse_hopf(std::istream& in, const std::string& source) { return parse_all(in, source, true); }

FiniteGroup parse_group(std::istream& in, const std::string& source, std::string name) {
  Reader r(in, source);
  if (r.done()) throw ParseError(source, 0, "empty input");
  const Line& head = r.next();
  if (head.tokens[0] != "group") r.fail(head, "expected 'group <n>'");
  r.arity(head, 2);
  const long long n = r.integer(head, head.tokens[1]);
  if (n < 1) r.fail(head, "group order must be positive");
  std::vector<std::vector<int>> table;
  for (long long i = 0; i < n; ++i) {
    const Line& l = r.next();
    if (static_cast<long long>(l.tokens.size()) != n) r.fail(l, "table row needs " + std::to_string(n) + " entries");
    std::vector<int> row;
    for (const auto& t : l.tokens) row.push_back(static_cast<int>(r.index(l, t, static_cast<Index>(n))));
    table.push_back(std::move(row));
  }
  if (!r.done()) r.fail(r.peek(), "trailing content after the group table");
  return annotated(source, [&] { return FiniteGroup(std::move(table), name.empty() ? source : name); });
}

ModularData parse_smatrix(std::istream& in, const std::string& source) {
  Reader r(in, source);
  if (r.done()) throw ParseError(source, 0, "empty input");
  const Line& head = r.next();
  if (head.tokens[0] != "smatrix") r.fail(head, "expected 'smatrix <field> <n>'");
  r.arity(head, 3);
  const FieldSpec f = r.field(head, head.tokens[1]);
  const long long n = r.integer(head, head.tokens[2]);
  if (n < 1) r.fail(head, "size must be positive");
  ModularData md;
  md.s = read_rows(r, static_cast<Index>(n), static_cast<Index>(n), f);
  for (long long i = 0; i < n; ++i) md.labels.push_back(std::to_string(i));
  while (!r.done()) {
    const Line& l = r.next();
    if (l.tokens[0] == "labels") {
      if (static_cast<long long>(l.tokens.size()) != n + 1) r.fail(l, "need one label per simple");
      md.labels.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (l.tokens[0] == "twist") {
      md.t = r.row(l, 1, static_cast<Index>(n), f);
    } else {
      r.fail(l, "unknown record '" + l.tokens[0] + "'");
    }
  }
  return md;
}

IrrepCatalog parse_irreps(std::istream& in, const FieldSpec& target, const std::string& source) {
  Reader r(in, source);
  IrrepCatalog cat;
  while (!r.done()) {
    const Line& head = r.next();
    if (head.tokens[0] != "irrep") r.fail(head, "expected 'irrep <class> <dim> <cyclotomic-n>'");
    r.arity(head, 4);
    const long long cls = r.integer(head, head.tokens[1]);
    const long long dim = r.integer(head, head.tokens[2]);
    const long long cyc = r.integer(head, head.tokens[3]);
    if (cls < 0 || dim < 1 || cyc < 1) r.fail(head, "class, dimension and cyclotomic order must be valid");
    if (cyc != 1 && !(target == FieldSpec::cyclotomic(cyc)))
      r.fail(head, "irrep written over cyc:" + std::to_string(cyc) + " but the double uses " + target.to_string());
    const Line& gl = r.next();
    if (gl.tokens[0] != "generators" || gl.tokens.size() < 2) r.fail(gl, "expected 'generators g_1 ... g_k'");
    IrrepData data;
    for (std::size_t i = 1; i < gl.tokens.size(); ++i)
      data.generators.push_back(static_cast<int>(r.integer(gl, gl.tokens[i])));
    for (std::size_t k = 0; k < data.generators.size(); ++k)
      data.images.push_back(read_rows(r, static_cast<Index>(dim), static_cast<Index>(dim), target));
    cat[static_cast<int>(cls)].push_back(std::move(data));
  }
  return cat;
}

std::string write_algebra(const StructureAlgebra& a, const std::optional<Vector>& form) {
  std::ostringstream os;
  os << "algebra " << a.field().to_string() << " " << a.dim() << "\n";
  for (const auto& t : a.terms()) os << t.i << " " << t.j << " " << t.k << " " << scalar_text(t.value) << "\n";
  os << "unit " << join(a.unit()) << "\n";
  if (form) os << "form " << join(*form) << "\n";
  return os.str();
}

std::string write_hopf(const HopfAlgebra& h, const Tensor* r, const Vector* ribbon) {
  std::ostringstream os;
  os << write_algebra(h.alg());
  for (const auto& t : h.coproduct_terms())
    os << "coproduct " << t.i << " " << t.j << " " << t.k << " " << scalar_text(t.value) << "\n";
  os << "counit " << join(h.counit()) << "\nantipode\n";
  for (Index i = 0; i < h.dim(); ++i) os << join(h.antipode().row(i).transpose()) << "\n";
  if (r)
    for (const auto& [k, c] : r->terms()) os << "R " << k / h.dim() << " " << k % h.dim() << " " << scalar_text(c) << "\n";
  if (ribbon) os << "ribbon " << join(*ribbon) << "\n";
  return os.str();
}

std::string write_smatrix(const ModularData& md) {
  std::ostringstream os;
  const FieldSpec f = detail::typed_sample(md.s).field();
  os << "smatrix " << f.to_string() << " " << md.s.rows() << "\n";
  for (Index i = 0; i < md.s.rows(); ++i) os << join(md.s.row(i).transpose()) << "\n";
  os << "labels";
  for (const auto& l : md.labels) os << " " << l;
  os << "\n";
  if (md.t) os << "twist " << join(*md.t) << "\n";
  return os.str();
}

FiniteGroup resolve_group(const std::string& name_or_path) {
  if (std::filesystem::is_regular_file(name_or_path)) {
    auto in = open(name_or_path);
    return parse_group(in, name_or_path, std::filesystem::path(name_or_path).stem().string());
  }
  return catalog_group(name_or_path);
}

AlgebraFile resolve_algebra(const std::string& name_or_path) {
  if (std::filesystem::is_regular_file(name_or_path)) {
    auto in = open(name_or_path);
    return parse_algebra(in, name_or_path);
  }
  auto c = catalog_algebra(name_or_path);
  return {c.algebra, c.form};
}

HopfFile load_hopf(const std::string& path) {
  auto in = open(path);
  return parse_hopf(in, path);
}

ModularData load_smatrix(const std::string& path) {
  auto in = open(path);
  return parse_smatrix(in, path);
}

IrrepCatalog load_irreps(const std::string& path, const FieldSpec& target) {
  auto in = open(path);
  return parse_irreps(in, target, path);
}

}  // namespace vl
