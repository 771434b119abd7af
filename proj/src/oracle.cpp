#include "had/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "had/error.hpp"

namespace had {

namespace {

struct CoordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto x : v) h = SeedStream::mix(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

using PointSet = std::unordered_set<std::vector<std::uint64_t>, CoordsHash>;

// Projective points of P^{g-1}(F_q): first nonzero coordinate is 1.
std::vector<std::vector<FieldElem>> projective_points(std::uint64_t q, std::size_t g) {
  std::vector<std::vector<FieldElem>> out;
  for (std::size_t lead = 0; lead < g; ++lead) {
    const std::size_t free = g - 1 - lead;
    std::vector<FieldElem> v(g);
    v[lead] = FieldElem{1};
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < free; ++i) {
        v[lead + 1 + i] = FieldElem{rest % q};
        rest /= q;
      }
      out.push_back(v);
    }
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

int estimate_dim(std::uint64_t count, std::uint64_t q) {
  if (count <= 1) return 0;
  return static_cast<int>(std::lround(std::log(static_cast<double>(count)) / std::log(static_cast<double>(q))));
}

void insert_normalized(const PrimeField& field, std::vector<FieldElem> coords, PointSet& seen) {
  if (auto p = ProjectivePoint::try_normalized(field, std::move(coords))) {
    std::vector<std::uint64_t> key;
    key.reserve(p->size());
    for (auto c : p->coords()) key.push_back(c.value);
    seen.insert(std::move(key));
  }
}

PointSet image_points(const Variety& x, std::uint64_t* tuples_out) {
  const auto& rep = x.as_param();
  const PrimeField& field = x.field();
  const std::uint64_t q = field.modulus();

  std::vector<std::vector<std::vector<FieldElem>>> group_points;
  std::uint64_t tuples = 1;
  for (std::size_t g : rep.groups) {
    std::uint64_t size = 0;
    std::uint64_t qpow = 1;
    for (std::size_t i = 0; i < g; ++i) {
      size = size > UINT64_MAX - qpow ? UINT64_MAX : size + qpow;
      qpow = saturating_mul(qpow, q);
    }
    tuples = saturating_mul(tuples, size);
  }
  if (tuples > kOracleLimit) {
    throw Error(Errc::TooLarge, x.name() + ": " + std::to_string(tuples) + " parameter tuples exceed the oracle limit");
  }
  for (std::size_t g : rep.groups) group_points.push_back(projective_points(q, g));
  *tuples_out = tuples;

  PointSet seen;
  std::vector<FieldElem> params(x.param_count());
  std::vector<FieldElem> image(rep.components.size());
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t group, std::size_t offset) {
    if (group == group_points.size()) {
      for (std::size_t i = 0; i < image.size(); ++i) image[i] = evaluate(field, rep.components[i], params);
      insert_normalized(field, image, seen);
      return;
    }
    for (const auto& pt : group_points[group]) {
      std::copy(pt.begin(), pt.end(), params.begin() + static_cast<std::ptrdiff_t>(offset));
      walk(group + 1, offset + pt.size());
    }
  };
  walk(0, 0);
  return seen;
}

}  // namespace

bool within_window(std::uint64_t count, std::uint64_t q, int d) {
  const double target = std::pow(static_cast<double>(q), d);
  const auto c = static_cast<double>(count);
  return c >= target / 8.0 && c <= 8.0 * target;
}

PointCount point_count_dim(const Variety& x) {
  PointCount out;
  out.q = x.field().modulus();
  out.count = image_points(x, &out.tuples).size();
  out.dim_estimate = estimate_dim(out.count, out.q);
  return out;
}

PointCount point_count_product(std::span<const Variety> factors) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "no factors");
  const PrimeField& field = factors.front().field();
  const std::size_t len = factors.front().ambient_dim() + 1;

  std::vector<std::vector<std::vector<FieldElem>>> images;
  std::uint64_t tuples = 1;
  for (const auto& x : factors) {
    if (x.ambient_dim() + 1 != len) throw Error(Errc::ArityMismatch, "factors live in different projective spaces");
    std::uint64_t ignored = 0;
    const PointSet pts = image_points(x, &ignored);
    std::vector<std::vector<FieldElem>> list;
    list.reserve(pts.size());
    for (const auto& key : pts) {
      std::vector<FieldElem> v;
      for (auto c : key) v.push_back(FieldElem{c});
      list.push_back(std::move(v));
    }
    std::sort(list.begin(), list.end());
    tuples = saturating_mul(tuples, list.size());
    images.push_back(std::move(list));
  }
  if (tuples > kOracleLimit) throw Error(Errc::TooLarge, "factor point tuples exceed the oracle limit");

  PointSet seen;
  std::vector<std::vector<FieldElem>> partial(factors.size() + 1, std::vector<FieldElem>(len, FieldElem{1}));
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == images.size()) {
      insert_normalized(field, partial[j], seen);
      return;
    }
    for (const auto& pt : images[j]) {
      for (std::size_t i = 0; i < len; ++i) partial[j + 1][i] = field.mul(partial[j][i], pt[i]);
      walk(j + 1);
    }
  };
  walk(0);

  PointCount out;
  out.q = field.modulus();
  out.tuples = tuples;
  out.count = seen.size();
  out.dim_estimate = estimate_dim(out.count, out.q);
  return out;
}

}  // namespace had
