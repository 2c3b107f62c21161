#include "rotset/orbit.hpp"

#include <cmath>
#include <exception>
#include <utility>

#include "rotset/errors.hpp"

namespace rotset {

namespace {

inline Vec2 step_one(const TorusLift& lift, Vec2 base, Vec2 prev, int dir) {
  const Vec2 at = base + prev;
  if (dir > 0) return prev + lift.displacement(at);
  return prev + (lift.inverse(at) - at);
}

}  // namespace

void step_displacements_serial(const TorusLift& lift, std::span<const Vec2> base,
                               std::span<const Vec2> prev, std::span<Vec2> out, int dir) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(base.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = step_one(lift, base[i], prev[i], dir);
  }
}

void step_displacements(const TorusLift& lift, std::span<const Vec2> base,
                        std::span<const Vec2> prev, std::span<Vec2> out, int dir) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(base.size());
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = step_one(lift, base[i], prev[i], dir);
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

OrbitCache::OrbitCache(TorusLift lift, std::vector<Vec2> seeds, bool parallel)
    : lift_(std::move(lift)), seeds_(std::move(seeds)), parallel_(parallel) {
  if (seeds_.empty()) throw EmptyInputError("orbit cache needs at least one seed");
  samples_ = seeds_;
  fwd_.push_back(std::vector<Vec2>(seeds_.size()));  // Delta_0 = 0
  bwd_.push_back(fwd_.front());
}

OrbitCache OrbitCache::center_grid(const TorusLift& lift, int grid_n, bool parallel) {
  if (grid_n < 2) throw Error("grid_n must be >= 2");
  std::vector<Vec2> seeds;
  seeds.reserve(static_cast<std::size_t>(grid_n) * static_cast<std::size_t>(grid_n));
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      seeds.emplace_back((i + 0.5) / grid_n, (j + 0.5) / grid_n);
    }
  }
  OrbitCache cache(lift, std::move(seeds), parallel);
  cache.grid_n_ = grid_n;
  return cache;
}

OrbitCache OrbitCache::box_grid(const TorusLift& lift, const Box& k_box, int per_side,
                                bool parallel) {
  if (per_side < 2) throw Error("box grid needs per_side >= 2");
  if (!k_box.positive_area()) throw Error("box must have positive area");
  // Cell corners first, then cell centers; the centers feed the local
  // oscillation estimate of the hit test.
  const std::size_t corners =
      static_cast<std::size_t>(per_side + 1) * static_cast<std::size_t>(per_side + 1);
  std::vector<Vec2> samples;
  samples.reserve(corners + static_cast<std::size_t>(per_side) * static_cast<std::size_t>(per_side));
  for (int j = 0; j <= per_side; ++j) {
    for (int i = 0; i <= per_side; ++i) {
      samples.emplace_back(k_box.lo.x + k_box.width() * i / per_side,
                           k_box.lo.y + k_box.height() * j / per_side);
    }
  }
  for (int j = 0; j < per_side; ++j) {
    for (int i = 0; i < per_side; ++i) {
      samples.emplace_back(k_box.lo.x + k_box.width() * (i + 0.5) / per_side,
                           k_box.lo.y + k_box.height() * (j + 0.5) / per_side);
    }
  }
  std::vector<Vec2> seeds;
  seeds.reserve(samples.size());
  for (const Vec2& s : samples) seeds.push_back(frac_unit(s));
  OrbitCache cache(lift, std::move(seeds), parallel);
  cache.samples_ = std::move(samples);
  cache.per_side_ = per_side;
  cache.box_ = k_box;
  return cache;
}

void OrbitCache::ensure(std::int64_t k) {
  auto& tables = (k >= 0) ? fwd_ : bwd_;
  const std::size_t want = static_cast<std::size_t>(k >= 0 ? k : -k);
  const int dir = (k >= 0) ? 1 : -1;
  while (tables.size() <= want) {
    const std::size_t next = tables.size();
    std::vector<Vec2> table(seeds_.size());
    if (lift_.constant_displacement()) {
      // Exact closed form: Delta_k = k * delta, identical for every seed.
      const Vec2 d = lift_.displacement({0.0, 0.0});
      const double kk = static_cast<double>(dir) * static_cast<double>(next);
      const Vec2 val{kk * d.x, kk * d.y};
      for (auto& v : table) v = val;
    } else if (parallel_) {
      step_displacements(lift_, seeds_, tables[next - 1], table, dir);
    } else {
      step_displacements_serial(lift_, seeds_, tables[next - 1], table, dir);
    }
    tables.push_back(std::move(table));
  }
}

bool OrbitCache::has(std::int64_t k) const {
  if (k >= 0) return static_cast<std::size_t>(k) < fwd_.size();
  return static_cast<std::size_t>(-k) < bwd_.size();
}

std::span<const Vec2> OrbitCache::displacements(std::int64_t k) const {
  if (!has(k)) throw Error("orbit cache has no table for k = " + std::to_string(k));
  const auto& t = (k >= 0) ? fwd_[static_cast<std::size_t>(k)] : bwd_[static_cast<std::size_t>(-k)];
  return {t.data(), t.size()};
}

Vec2 word_evaluate(const ActionWord& w, const TorusLift& lift, Vec2 z) {
  const Vec2 fz = lift.iterate(z, w.f);
  return {fz.x + static_cast<double>(w.s), fz.y + static_cast<double>(w.t)};
}

Vec2 word_evaluate(const ActionWord& w, const TorusLift& lift, Vec2 z, const OrbitCache& cache) {
  if (cache.has(w.f)) {
    const Vec2 zf = frac_unit(z);
    const auto& seeds = cache.seeds();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (seeds[i] == zf) {
        const Vec2 d = cache.displacements(w.f)[i];
        return {z.x + d.x + static_cast<double>(w.s), z.y + d.y + static_cast<double>(w.t)};
      }
    }
  }
  return word_evaluate(w, lift, z);
}

std::vector<Vec2> displacement_samples(const TorusLift& lift, std::int64_t k, int grid_n,
                                       OrbitCache* cache, bool parallel) {
  if (grid_n < 2) throw Error("grid_n must be >= 2");
  if (cache != nullptr) {
    if (cache->grid_n() != grid_n) throw Error("cache grid does not match grid_n");
    cache->ensure(k);
    const auto table = cache->displacements(k);
    return {table.begin(), table.end()};
  }
  OrbitCache local = OrbitCache::center_grid(lift, grid_n, parallel);
  local.ensure(k);
  const auto table = local.displacements(k);
  return {table.begin(), table.end()};
}

std::string word_to_string(const ActionWord& w) {
  return "S^" + std::to_string(w.s) + " T^" + std::to_string(w.t) + " F^" + std::to_string(w.f);
}

}  // namespace rotset
