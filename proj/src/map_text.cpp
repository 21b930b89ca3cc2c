#include <cctype>
#include <cmath>
#include <charconv>
#include <sstream>

#include "schlicht/disk_map.hpp"

namespace schlicht {

namespace {

struct TextVisitor {
  std::string operator()(const node::Identity&) const { return "(id)"; }
  std::string operator()(const node::Rotation& r) const {
    return "(rot " + format_real(r.alpha) + ")";
  }
  std::string operator()(const node::Moebius& m) const {
    return "(moebius " + format_complex(m.a) + " " + format_complex(m.b) + " " +
           format_complex(m.c) + " " + format_complex(m.d) + ")";
  }
  std::string operator()(const node::Blaschke& b) const {
    std::string s = "(blaschke " + format_real(b.phase);
    for (Cx a : b.zeros) s += " " + format_complex(a);
    return s + ")";
  }
  std::string operator()(const node::PickBeta& p) const {
    return "(pickbeta " + format_real(p.beta) + ")";
  }
  std::string operator()(const node::PickPlus& p) const {
    return "(pick+ " + format_real(p.x) + " " + format_real(p.theta) + ")";
  }
  std::string operator()(const node::PickMinus& p) const {
    return "(pick- " + format_real(p.x) + " " + format_real(p.theta) + ")";
  }
  std::string operator()(const node::MoebT& m) const {
    return "(moebT " + format_real(m.t) + " " + format_real(m.theta) + ")";
  }
  std::string operator()(const node::MoebTInverse& m) const {
    return "(moebTinv " + format_real(m.t) + " " + format_real(m.theta) + ")";
  }
  std::string operator()(const node::RootBranch& r) const {
    return "(root " + std::to_string(r.n) + " " + to_text(*r.inner) + ")";
  }
  std::string operator()(const node::Exponential& e) const {
    return "(exp " + format_real(e.t) + ")";
  }
  std::string operator()(const node::Compose& c) const {
    return "(compose " + to_text(*c.outer) + " " + to_text(*c.inner) + ")";
  }
};

// s-expression reader
struct Sexp {
  std::string atom;
  std::vector<Sexp> items;
  bool is_list = false;
};

class Reader {
public:
  explicit Reader(std::string_view text) : s_(text) {}

  Sexp read() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      Sexp list;
      list.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) fail("missing ')'");
        if (s_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (s_[pos_] == ')') fail("unexpected ')'");
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    Sexp atom;
    atom.atom = std::string(s_.substr(start, pos_ - start));
    return atom;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " in map text '" + std::string(s_) + "'");
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double real_atom(const Sexp& e) {
  if (e.is_list) throw Error(ErrorKind::ParseError, "expected a number");
  Cx z = parse_complex(e.atom);
  if (z.imag() != 0.0 || e.atom.back() == 'i')
    throw Error(ErrorKind::ParseError, "expected a real number, got '" + e.atom + "'");
  return z.real();
}

Cx complex_atom(const Sexp& e) {
  if (e.is_list) throw Error(ErrorKind::ParseError, "expected a number");
  return parse_complex(e.atom);
}

DiskMap build(const Sexp& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    throw Error(ErrorKind::ParseError, "expected a (head ...) form");
  const std::string& head = e.items[0].atom;
  std::size_t argc = e.items.size() - 1;
  auto want = [&](std::size_t n) {
    if (argc != n)
      throw Error(ErrorKind::ParseError,
                  "'" + head + "' takes " + std::to_string(n) + " arguments");
  };
  const auto& a = e.items;
  if (head == "id") {
    want(0);
    return DiskMap::identity();
  }
  if (head == "rot") {
    want(1);
    return DiskMap::rotation(real_atom(a[1]));
  }
  if (head == "moebius") {
    want(4);
    return DiskMap::moebius(complex_atom(a[1]), complex_atom(a[2]), complex_atom(a[3]),
                            complex_atom(a[4]));
  }
  if (head == "blaschke") {
    if (argc < 1) throw Error(ErrorKind::ParseError, "'blaschke' needs a phase");
    std::vector<Cx> zeros;
    for (std::size_t k = 2; k < a.size(); ++k) zeros.push_back(complex_atom(a[k]));
    return DiskMap::blaschke(std::move(zeros), real_atom(a[1]));
  }
  if (head == "pickbeta") {
    want(1);
    return DiskMap::pick_beta(real_atom(a[1]));
  }
  if (head == "pick+") {
    want(2);
    return DiskMap::pick_plus(real_atom(a[1]), real_atom(a[2]));
  }
  if (head == "pick-") {
    want(2);
    return DiskMap::pick_minus(real_atom(a[1]), real_atom(a[2]));
  }
  if (head == "moebT") {
    want(2);
    return DiskMap::moeb_t(real_atom(a[1]), real_atom(a[2]));
  }
  if (head == "moebTinv") {
    want(2);
    return DiskMap::moeb_t_inverse(real_atom(a[1]), real_atom(a[2]));
  }
  if (head == "root") {
    want(2);
    double n = real_atom(a[1]);
    if (n != std::floor(n)) throw Error(ErrorKind::ParseError, "root order must be an integer");
    return DiskMap::root(build(a[2]), int(n));
  }
  if (head == "exp") {
    want(1);
    return DiskMap::exponential(real_atom(a[1]));
  }
  if (head == "compose") {
    want(2);
    return compose(build(a[1]), build(a[2]));
  }
  throw Error(ErrorKind::ParseError, "unknown map head '" + head + "'");
}

}  // namespace

std::string to_text(const DiskMap& map) { return std::visit(TextVisitor{}, map.node()); }

DiskMap parse_map(std::string_view text) {
  Reader r(text);
  Sexp e = r.read();
  r.finish();
  try {
    return build(e);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::DomainError) throw Error(ErrorKind::ParseError, err.what());
    throw;
  }
}

}  // namespace schlicht
