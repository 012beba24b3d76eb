#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peirce {

// Syntax error in monomial text; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A commutative nonassociative power of the single generator z, stored as a
// complete unordered binary tree. Products keep their children in canonical
// order (left <= right), so equal commutative words are structurally equal.
// Values are immutable and share subtrees; copying is cheap.
class Monomial {
 public:
  // The generator z.
  static Monomial atom();
  static Monomial product(const Monomial& x, const Monomial& y);
  // z^1 = z, z^n = z^(n-1) z. Throws std::invalid_argument for n = 0.
  static Monomial principal_power(unsigned n);
  // z^[1] = z, z^[n] = z^[n-1] z^[n-1]. Throws std::invalid_argument for
  // n = 0.
  static Monomial plenary_power(unsigned n);

  unsigned degree() const { return node_->degree; }
  bool is_atom() const { return node_->left == nullptr; }
  // Children of a product; calling these on the atom is a logic error.
  Monomial left() const;
  Monomial right() const;

  std::size_t hash() const { return node_->hash; }

  // Canonical order: degree first, then children lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& x,
                                          const Monomial& y);
  friend bool operator==(const Monomial& x, const Monomial& y);

 private:
  struct Node {
    unsigned degree = 1;
    std::size_t hash = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Monomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::strong_ordering compare(const Node* x, const Node* y);

  std::shared_ptr<const Node> node_;
};

// Grammar: m ::= "z" | m "*" m | "(" m ")" | m "^" INT | m "^[" INT "]".
// `^n` is the principal power and `^[n]` the plenary power of the operand.
// Whitespace is ignored. Throws ParseError.
Monomial parse_monomial(std::string_view text);

// Inverse of parse_monomial with minimal parentheses, using `z^n` and `z^[n]`
// wherever the tree is a principal or plenary power of z.
std::string format_monomial(const Monomial& m);

// Largest degree accepted by enumerate_monomials unless overridden.
inline constexpr unsigned kDefaultMaxEnumerationDegree = 14;

// All distinct monomials of degree d in canonical order. Throws
// std::out_of_range unless 1 <= d <= max_degree.
std::vector<Monomial> enumerate_monomials(
    unsigned d, unsigned max_degree = kDefaultMaxEnumerationDegree);

}  // namespace peirce

template <>
struct std::hash<peirce::Monomial> {
  std::size_t operator()(const peirce::Monomial& m) const { return m.hash(); }
};
