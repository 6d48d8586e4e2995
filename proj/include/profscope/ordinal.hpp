#pragma once

// Countable compact scattered spaces: ordinal signatures w^h*n+1 and a concrete
// inductive encoding (POINT / SUM / SEQLIM) with Cantor-Bendixson derivatives.
//
// SEQLIM(x) is the one-point compactification of countably many disjoint copies
// of x. Exponents are natural numbers only.

#include <cstdint>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "profscope/error.hpp"

namespace profscope {

struct OrdinalTerm {
  unsigned exponent = 0;
  std::uint64_t coefficient = 1;
  bool operator==(const OrdinalTerm&) const = default;
};

/// Σ w^{e_i}·c_i + 1 with strictly descending exponents.
class OrdinalSignature {
 public:
  OrdinalSignature() : terms_{{0, 1}} {}
  OrdinalSignature(unsigned h, std::uint64_t n) : OrdinalSignature(std::vector<OrdinalTerm>{{h, n}}) {}

  explicit OrdinalSignature(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidArgument("signature needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coefficient == 0) throw InvalidArgument("signature coefficients must be positive");
      if (i && terms_[i].exponent >= terms_[i - 1].exponent)
        throw InvalidArgument("signature exponents must strictly descend");
    }
  }

  const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }
  bool single_term() const noexcept { return terms_.size() == 1; }

  unsigned h() const {
    require_single("h");
    return terms_.front().exponent;
  }
  std::uint64_t n() const {
    require_single("n");
    return terms_.front().coefficient;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& t : terms_) os << "w^" << t.exponent << "*" << t.coefficient << "+";
    os << "1";
    return os.str();
  }

  /// Accepts "w^k*n+...+1"; "w" alone means w^1 and a missing "*n" means n = 1.
  static OrdinalSignature parse(const std::string& text) {
    static const std::regex term_re(R"(^w(?:\^(\d+))?(?:\*(\d+))?$)");
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch == '+') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.back() != "1") throw InvalidArgument("signature must end in +1: '" + text + "'");
    parts.pop_back();
    std::vector<OrdinalTerm> terms;
    for (const auto& p : parts) {
      std::smatch m;
      if (!std::regex_match(p, m, term_re)) throw InvalidArgument("bad signature term '" + p + "'");
      try {
        OrdinalTerm t;
        t.exponent = m[1].matched ? static_cast<unsigned>(std::stoul(m[1].str())) : 1;
        t.coefficient = m[2].matched ? std::stoull(m[2].str()) : 1;
        terms.push_back(t);
      } catch (const std::out_of_range&) {
        throw InvalidArgument("signature term out of range '" + p + "'");
      }
    }
    return OrdinalSignature(std::move(terms));
  }

  bool operator==(const OrdinalSignature&) const = default;

 private:
  void require_single(const char* what) const {
    if (!single_term()) throw InvalidArgument(std::string("multi-term signature has no single ") + what);
  }

  std::vector<OrdinalTerm> terms_;
};

class ConcreteSpace {
 public:
  enum class Kind { Point, Sum, SeqLim };

  static ConcreteSpace point() { return ConcreteSpace(std::make_shared<Node>(Node{Kind::Point, {}})); }

  static ConcreteSpace sum(std::vector<ConcreteSpace> xs) {
    if (xs.empty()) throw InvalidArgument("SUM needs at least one member");
    return ConcreteSpace(std::make_shared<Node>(Node{Kind::Sum, std::move(xs)}));
  }

  static ConcreteSpace seqlim(ConcreteSpace body) {
    return ConcreteSpace(std::make_shared<Node>(Node{Kind::SeqLim, {std::move(body)}}));
  }

  static ConcreteSpace copies(const ConcreteSpace& x, std::size_t n) {
    if (n == 0) throw InvalidArgument("need at least one copy");
    return sum(std::vector<ConcreteSpace>(n, x));
  }

  Kind kind() const noexcept { return node_->kind; }
  const std::vector<ConcreteSpace>& children() const noexcept { return node_->children; }
  const ConcreteSpace& body() const { return node_->children.at(0); }

  bool operator==(const ConcreteSpace& o) const {
    if (node_ == o.node_) return true;
    return kind() == o.kind() && children() == o.children();
  }

  std::string to_string() const {
    switch (kind()) {
      case Kind::Point: return "POINT";
      case Kind::SeqLim: return "SEQLIM(" + body().to_string() + ")";
      default: {
        std::string s = "SUM(";
        for (std::size_t i = 0; i < children().size(); ++i) s += (i ? "," : "") + children()[i].to_string();
        return s + ")";
      }
    }
  }

 private:
  struct Node {
    Kind kind;
    std::vector<ConcreteSpace> children;
  };

  explicit ConcreteSpace(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Set of limit points; nullopt is the empty space.
inline std::optional<ConcreteSpace> derivative(const ConcreteSpace& x) {
  switch (x.kind()) {
    case ConcreteSpace::Kind::Point: return std::nullopt;
    case ConcreteSpace::Kind::SeqLim: {
      auto inner = derivative(x.body());
      if (!inner) return ConcreteSpace::point();
      return ConcreteSpace::seqlim(*inner);
    }
    default: {
      std::vector<ConcreteSpace> parts;
      for (const auto& c : x.children())
        if (auto d = derivative(c)) parts.push_back(*d);
      if (parts.empty()) return std::nullopt;
      return ConcreteSpace::sum(std::move(parts));
    }
  }
}

inline std::optional<ConcreteSpace> derivative(const ConcreteSpace& x, std::size_t k) {
  std::optional<ConcreteSpace> cur = x;
  for (std::size_t i = 0; i < k && cur; ++i) cur = derivative(*cur);
  return cur;
}

/// Number of points, nullopt when infinite.
inline std::optional<std::uint64_t> cardinality(const ConcreteSpace& x) {
  switch (x.kind()) {
    case ConcreteSpace::Kind::Point: return 1;
    case ConcreteSpace::Kind::SeqLim: return std::nullopt;
    default: {
      std::uint64_t total = 0;
      for (const auto& c : x.children()) {
        auto n = cardinality(c);
        if (!n) return std::nullopt;
        total += *n;
      }
      return total;
    }
  }
}

inline std::size_t height(const ConcreteSpace& x) {
  std::size_t k = 0;
  for (std::optional<ConcreteSpace> cur = x; cur; cur = derivative(*cur)) ++k;
  return k;
}

inline std::uint64_t top_count(const ConcreteSpace& x) {
  const auto top = derivative(x, height(x) - 1);
  return *cardinality(*top);
}

inline OrdinalSignature signature_of(const ConcreteSpace& x) {
  return OrdinalSignature(static_cast<unsigned>(height(x) - 1), top_count(x));
}

inline ConcreteSpace concrete_of(const OrdinalSignature& s) {
  if (!s.single_term()) throw InvalidArgument("multi-term signature " + s.to_string() + " has no concrete form here");
  ConcreteSpace x = ConcreteSpace::point();
  for (unsigned i = 0; i < s.h(); ++i) x = ConcreteSpace::seqlim(x);
  return s.n() == 1 ? x : ConcreteSpace::copies(x, s.n());
}

/// Point ranks add in products, so the top rank is h_a + h_b with n_a·n_b points.
inline OrdinalSignature product(const OrdinalSignature& a, const OrdinalSignature& b) {
  return OrdinalSignature(a.h() + b.h(), a.n() * b.n());
}

inline bool homeomorphic(const OrdinalSignature& a, const OrdinalSignature& b) {
  return a.h() == b.h() && a.n() == b.n();
}

}  // namespace profscope
