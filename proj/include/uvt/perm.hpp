#ifndef UVT_PERM_HPP
#define UVT_PERM_HPP

// Permutations of {0..n-1}, the sum-of-permutation-matrices type, and the
// derangement / Schur-orthogonality predicates.
//
// Matrix convention used throughout the library: the permutation matrix of
// sigma has entry (u, v) = 1 iff sigma(u) == v (row = source point).
// compose(s, t) applies t first, so matrix(compose(s, t)) = matrix(t) * matrix(s);
// with the transposed (column = source) convention the product reads s * t.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uvt {

/// Largest degree a permutation may have (points are stored in one byte).
inline constexpr std::size_t kMaxDegree = 255;

/// An input exceeds a configured size limit (vertices, degree, orbitals...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("permutation degree mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b)) {}
};

class Perm {
 public:
  using Point = std::uint8_t;

  Perm() = default;

  /// Identity on n points.
  explicit Perm(std::size_t n) : images_(n) {
    if (n > kMaxDegree) throw std::invalid_argument("permutation degree over limit");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Builds from an image array; throws if it is not a bijection.
  template <typename Int>
  static Perm from_images(std::span<const Int> images) {
    Perm p;
    if (images.size() > kMaxDegree) throw std::invalid_argument("permutation degree over limit");
    p.images_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto v = static_cast<long long>(images[i]);
      if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v])
        throw std::invalid_argument("image array is not a permutation");
      seen[v] = true;
      p.images_[i] = static_cast<Point>(v);
    }
    return p;
  }
  static Perm from_images(std::initializer_list<int> images) {
    std::vector<int> v(images);
    return from_images(std::span<const int>(v));
  }
  static Perm from_images(const std::vector<int>& images) {
    return from_images(std::span<const int>(images));
  }

  /// Builds a permutation on n points from disjoint cycles.
  static Perm from_cycles(std::size_t n, std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<std::vector<int>> cs;
    for (auto& c : cycles) cs.emplace_back(c);
    return from_cycles(n, cs);
  }
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> touched(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n ||
            touched[a])
          throw std::invalid_argument("bad cycle notation");
        touched[a] = true;
        img[a] = b;
      }
    }
    return from_images(img);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  std::vector<int> image_vector() const { return {images_.begin(), images_.end()}; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

  /// Cycle notation, cycles sorted by least element, fixed points omitted.
  std::string to_cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      out << '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out << ' ';
        out << j;
        first = false;
        j = images_[j];
      }
      out << ')';
    }
    if (!any) out << "()";
    return out.str();
  }

 private:
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
  std::vector<Point> images_;
};

inline Perm identity(std::size_t n) { return Perm(n); }

/// i -> s(t(i)).
inline Perm compose(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw DegreeMismatch(s.degree(), t.degree());
  Perm r;
  r.images_.resize(t.degree());
  for (std::size_t i = 0; i < t.degree(); ++i) r.images_[i] = s.images_[t.images_[i]];
  return r;
}

inline Perm inverse(const Perm& s) {
  Perm r;
  r.images_.resize(s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) r.images_[s.images_[i]] = static_cast<Perm::Point>(i);
  return r;
}

inline bool is_derangement(const Perm& s) noexcept {
  for (std::size_t i = 0; i < s.degree(); ++i)
    if (s[i] == i) return false;
  return true;
}

/// True iff the entrywise product of the two permutation matrices is zero,
/// i.e. s and t disagree on every point.
inline bool schur_orthogonal(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw DegreeMismatch(s.degree(), t.degree());
  auto a = s.images();
  auto b = t.images();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) return false;
  return true;
}

/// n x n matrix of non-negative counts: the sum of a list of permutation matrices.
class SumMatrix {
 public:
  explicit SumMatrix(std::size_t n = 0) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

  void add(const Perm& p) {
    if (p.degree() != n_) throw DegreeMismatch(p.degree(), n_);
    for (std::size_t u = 0; u < n_; ++u) {
      auto& c = cells_[u * n_ + p[u]];
      if (c == std::numeric_limits<std::int32_t>::max()) throw std::overflow_error("SumMatrix entry overflow");
      ++c;
    }
    ++terms_;
  }

  std::size_t terms() const noexcept { return terms_; }

  /// True iff every entry equals k (k = 1 is the all-ones matrix J_n).
  bool is_constant(std::int64_t k) const noexcept {
    return std::all_of(cells_.begin(), cells_.end(), [k](std::int64_t c) { return c == k; });
  }

 private:
  std::size_t n_;
  std::size_t terms_ = 0;
  std::vector<std::int64_t> cells_;
};

inline SumMatrix sum_perms(std::span<const Perm> perms, std::size_t degree) {
  SumMatrix m(degree);
  for (const auto& p : perms) m.add(p);
  return m;
}

inline SumMatrix sum_perms(std::span<const Perm> perms) {
  if (perms.empty()) throw std::invalid_argument("sum_perms: empty list has no degree");
  return sum_perms(perms, perms.front().degree());
}

enum class UniformSumResult { kOk, kSizeMismatch, kEntryMismatch };

/// Checks sum_perms(perms) == k * J_n; the size mismatch |S| != k*n is
/// reported separately from an entry mismatch.
inline UniformSumResult check_k_uniform_sum(std::span<const Perm> perms, std::size_t degree, std::size_t k) {
  if (k == 0 || perms.size() != k * degree) return UniformSumResult::kSizeMismatch;
  return sum_perms(perms, degree).is_constant(static_cast<std::int64_t>(k)) ? UniformSumResult::kOk
                                                                           : UniformSumResult::kEntryMismatch;
}

inline bool is_k_uniform_sum(std::span<const Perm> perms, std::size_t k) {
  if (perms.empty()) return false;
  return check_k_uniform_sum(perms, perms.front().degree(), k) == UniformSumResult::kOk;
}

}  // namespace uvt

#endif  // UVT_PERM_HPP
