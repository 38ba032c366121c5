#include "charzero/permutation.hpp"

#include <cctype>
#include <numeric>

#include "charzero/error.hpp"

namespace charzero {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point p = images_[i];
    if (p >= images_.size() || seen[p]) {
      throw MalformedGeneratorError("image array is not a bijection at position " +
                                    std::to_string(i));
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw MalformedGeneratorError("degree too large");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  if (degree > kMaxDegree) throw MalformedGeneratorError("degree too large");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      const std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw MalformedGeneratorError("cycle point " + std::to_string(from + 1) +
                                      " outside degree " + std::to_string(degree));
      }
      if (used[from]) {
        throw MalformedGeneratorError("point " + std::to_string(from + 1) +
                                      " appears in more than one cycle");
      }
      used[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // g^-1 * x * g maps g(p) -> g(x(p)).
  std::vector<Point> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) out[g.images_[p]] = g.images_[images_[p]];
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::extended(std::size_t new_degree, std::size_t offset) const {
  std::vector<Point> out(new_degree);
  std::iota(out.begin(), out.end(), Point{0});
  for (std::size_t p = 0; p < images_.size(); ++p) {
    out[p + offset] = static_cast<Point>(images_[p] + offset);
  }
  return Permutation(std::move(out), Unchecked{});
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::fixed_points() const { return cycles_of_length(1); }

std::size_t Permutation::cycles_of_length(std::size_t length) const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    if (len == length) ++count;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InputError("expected '(' at column " + std::to_string(i + 1) + " in \"" +
                       text + "\"");
    }
    ++i;
    std::vector<std::size_t> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("expected point number at column " + std::to_string(i + 1) +
                         " in \"" + text + "\"");
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxDegree) throw InputError("point number too large in \"" + text + "\"");
        ++i;
      }
      if (value == 0 || value > degree) {
        throw InputError("point " + std::to_string(value) + " outside 1.." +
                         std::to_string(degree));
      }
      cycle.push_back(value - 1);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i >= text.size()) throw InputError("unterminated cycle in \"" + text + "\"");
    ++i;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const MalformedGeneratorError& e) {
    throw InputError(e.what());
  }
}

}  // namespace charzero
