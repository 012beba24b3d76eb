#include "peirce/monomial.h"

#include <algorithm>
#include <cctype>
#include <limits>

namespace peirce {

namespace {

constexpr std::size_t kAtomHash = 0x51ed270b27ad4f1bULL;
// Parsed monomials above this degree are rejected to keep trees tractable.
constexpr unsigned long kMaxParsedDegree = 1UL << 20;

std::size_t mix(std::size_t a, std::size_t b) {
  std::size_t h = a * 0x9e3779b97f4a7c15ULL;
  h ^= b + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Monomial Monomial::atom() {
  static const auto kAtom = [] {
    auto n = std::make_shared<Node>();
    n->degree = 1;
    n->hash = kAtomHash;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return Monomial(kAtom);
}

Monomial Monomial::product(const Monomial& x, const Monomial& y) {
  auto n = std::make_shared<Node>();
  const bool ordered = compare(x.node_.get(), y.node_.get()) <= 0;
  n->left = ordered ? x.node_ : y.node_;
  n->right = ordered ? y.node_ : x.node_;
  n->degree = x.degree() + y.degree();
  n->hash = mix(n->left->hash, n->right->hash);
  return Monomial(std::move(n));
}

Monomial Monomial::principal_power(unsigned n) {
  if (n == 0) throw std::invalid_argument("principal power exponent must be >= 1");
  Monomial z = atom();
  Monomial m = z;
  for (unsigned k = 2; k <= n; ++k) m = product(m, z);
  return m;
}

Monomial Monomial::plenary_power(unsigned n) {
  if (n == 0) throw std::invalid_argument("plenary power exponent must be >= 1");
  Monomial m = atom();
  for (unsigned k = 2; k <= n; ++k) m = product(m, m);
  return m;
}

Monomial Monomial::left() const {
  if (is_atom()) throw std::logic_error("left() of the atom");
  return Monomial(node_->left);
}

Monomial Monomial::right() const {
  if (is_atom()) throw std::logic_error("right() of the atom");
  return Monomial(node_->right);
}

std::strong_ordering Monomial::compare(const Node* x, const Node* y) {
  if (x == y) return std::strong_ordering::equal;
  if (x->degree != y->degree) return x->degree <=> y->degree;
  if (x->left == nullptr) return std::strong_ordering::equal;  // both atoms
  auto c = compare(x->left.get(), y->left.get());
  if (c != 0) return c;
  return compare(x->right.get(), y->right.get());
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  return Monomial::compare(x.node_.get(), y.node_.get());
}

bool operator==(const Monomial& x, const Monomial& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash()) return false;
  return Monomial::compare(x.node_.get(), y.node_.get()) == 0;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Monomial principal_of(const Monomial& base, unsigned long n) {
  Monomial m = base;
  for (unsigned long k = 2; k <= n; ++k) m = Monomial::product(m, base);
  return m;
}

Monomial plenary_of(const Monomial& base, unsigned long n) {
  Monomial m = base;
  for (unsigned long k = 2; k <= n; ++k) m = Monomial::product(m, m);
  return m;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Monomial parse() {
    Monomial m = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Monomial expr() {
    Monomial m = postfix();
    while (accept('*')) m = Monomial::product(m, postfix());
    return m;
  }

  Monomial postfix() {
    Monomial m = primary();
    while (accept('^')) {
      const bool plenary = accept('[');
      std::size_t at = pos_;
      unsigned long n = integer();
      if (n == 0) throw ParseError("exponent 0 is not allowed", at);
      if (plenary) {
        expect(']');
        if (n > 21 ||
            (static_cast<unsigned long>(m.degree()) << (n - 1)) > kMaxParsedDegree) {
          throw ParseError("plenary exponent too large", at);
        }
        m = plenary_of(m, n);
      } else {
        if (n * m.degree() > kMaxParsedDegree) {
          throw ParseError("principal exponent too large", at);
        }
        m = principal_of(m, n);
      }
    }
    return m;
  }

  Monomial primary() {
    skip_ws();
    if (accept('z')) return Monomial::atom();
    if (accept('(')) {
      Monomial m = expr();
      expect(')');
      return m;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("expected 'z' or '('");
  }

  unsigned long integer() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > kMaxParsedDegree) throw ParseError("exponent too large", start);
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer exponent");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Formatting

bool is_principal(const Monomial& m) {
  if (m.is_atom()) return true;
  return m.left().is_atom() && is_principal(m.right());
}

bool is_plenary(const Monomial& m) {
  if (m.is_atom()) return true;
  return m.left() == m.right() && is_plenary(m.left());
}

unsigned log2_exact(unsigned d) {
  unsigned k = 0;
  while ((1U << k) < d) ++k;
  return k;
}

// Returns the text and whether it is a bare product needing parentheses when
// used as the right operand.
std::pair<std::string, bool> render(const Monomial& m) {
  if (m.is_atom()) return {"z", false};
  if (is_principal(m)) return {"z^" + std::to_string(m.degree()), false};
  if (is_plenary(m)) {
    return {"z^[" + std::to_string(log2_exact(m.degree()) + 1) + "]", false};
  }
  auto [ls, lbare] = render(m.left());
  auto [rs, rbare] = render(m.right());
  if (!rbare) return {ls + " * " + rs, true};
  if (!lbare) return {rs + " * " + ls, true};
  return {ls + " * (" + rs + ")", true};
}

}  // namespace

Monomial parse_monomial(std::string_view text) { return Parser(text).parse(); }

std::string format_monomial(const Monomial& m) { return render(m).first; }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Monomial> enumerate_monomials(unsigned d, unsigned max_degree) {
  if (d < 1 || d > max_degree) {
    throw std::out_of_range("enumeration degree " + std::to_string(d) +
                            " outside [1, " + std::to_string(max_degree) + "]");
  }
  std::vector<std::vector<Monomial>> levels(d + 1);
  levels[1] = {Monomial::atom()};
  for (unsigned n = 2; n <= d; ++n) {
    auto& out = levels[n];
    for (unsigned i = 1; 2 * i <= n; ++i) {
      const auto& small = levels[i];
      const auto& large = levels[n - i];
      for (std::size_t a = 0; a < small.size(); ++a) {
        // Equal degrees: unordered pairs only.
        std::size_t b0 = (i == n - i) ? a : 0;
        for (std::size_t b = b0; b < large.size(); ++b) {
          out.push_back(Monomial::product(small[a], large[b]));
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return levels[d];
}

}  // namespace peirce
