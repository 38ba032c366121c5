#include "charzero/perm_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "charzero/error.hpp"

namespace charzero {

namespace {

constexpr std::size_t kMaxBaseLength = 64;

std::uint64_t order_of(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t p = start; !seen[p]; p = images[p]) {
      seen[p] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t first_moved_point(const Permutation& g) {
  for (std::size_t p = 0; p < g.degree(); ++p) {
    if (g(static_cast<Point>(p)) != p) return p;
  }
  return g.degree();
}

}  // namespace

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_position.assign(degree_, -1);
  level.orbit_position[level.base_point] = 0;
  level.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const Point beta = level.orbit[idx];
    for (const auto& s : level.strong) {
      const Point gamma = s(beta);
      if (level.orbit_position[gamma] >= 0) continue;
      level.orbit_position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(level.transversal[idx] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const std::int32_t pos = level.orbit_position[g(level.base_point)];
    if (pos < 0) return {std::move(g), l};
    g = g * level.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return {std::move(g), levels_.size()};
}

PermGroup PermGroup::build(std::vector<Permutation> generators, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw MalformedGeneratorError("degree must lie in 1.." + std::to_string(kMaxDegree));
  }
  PermGroup group;
  group.degree_ = degree;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw MalformedGeneratorError("generator of degree " + std::to_string(g.degree()) +
                                    " in a group of degree " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(group.generators_.begin(), group.generators_.end(), g) !=
        group.generators_.end()) {
      continue;
    }
    group.generators_.push_back(std::move(g));
  }

  auto& levels = group.levels_;
  for (const auto& g : group.generators_) {
    bool fixes_base = true;
    for (const auto& level : levels) {
      if (g(level.base_point) != level.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) {
      Level level;
      level.base_point = static_cast<Point>(first_moved_point(g));
      levels.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& g : group.generators_) {
      bool fixes_prefix = true;
      for (std::size_t t = 0; t < l; ++t) {
        if (g(levels[t].base_point) != levels[t].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels[l].strong.push_back(g);
    }
    group.rebuild_orbit(levels[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t idx = 0; idx < levels[li].orbit.size() && !restarted; ++idx) {
      for (std::size_t si = 0; si < levels[li].strong.size(); ++si) {
        const Level& level = levels[li];
        const Permutation& s = level.strong[si];
        const Point image = s(level.orbit[idx]);
        const auto target = static_cast<std::size_t>(level.orbit_position[image]);
        Permutation h = level.transversal[idx] * s * level.transversal[target].inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = group.sift(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (stop == levels.size()) {
          Level fresh;
          fresh.base_point = static_cast<Point>(first_moved_point(residue));
          levels.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels[l].strong.push_back(residue);
          group.rebuild_orbit(levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  group.finalize();
  return group;
}

void PermGroup::finalize() {
  base_.clear();
  order_ = 1;
  for (const auto& level : levels_) {
    base_.push_back(level.base_point);
    order_ *= level.orbit.size();
  }
  if (levels_.size() > kMaxBaseLength) throw InternalError("base longer than supported");
  strides_.assign(levels_.size(), 1);
  for (std::size_t l = levels_.size(); l-- > 1;) {
    strides_[l - 1] = strides_[l] * levels_[l].orbit.size();
  }
  inverse_offsets_.clear();
  inverse_images_.clear();
  for (const auto& level : levels_) {
    inverse_offsets_.push_back(inverse_images_.size());
    for (const auto& u : level.transversal) {
      const Permutation inv = u.inverse();
      inverse_images_.insert(inverse_images_.end(), inv.images().begin(), inv.images().end());
    }
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
    }
  }
  return true;
}

std::uint64_t PermGroup::rank(const Permutation& g) const {
  if (!contains(g)) throw NotAMemberError("element " + g.to_cycle_string() + " not in group");
  std::array<Point, kMaxBaseLength> images{};
  for (std::size_t l = 0; l < base_.size(); ++l) images[l] = g(base_[l]);
  return rank_from_base_images(images.data());
}

std::uint64_t PermGroup::rank_from_base_images(const Point* base_images) const {
  std::array<const Point*, kMaxBaseLength> chosen{};
  std::uint64_t r = 0;
  const std::size_t m = levels_.size();
  for (std::size_t l = 0; l < m; ++l) {
    Point x = base_images[l];
    for (std::size_t t = 0; t < l; ++t) x = chosen[t][x];
    const auto pos = static_cast<std::uint64_t>(levels_[l].orbit_position[x]);
    chosen[l] = inverse_images_.data() + inverse_offsets_[l] + pos * degree_;
    r += pos * strides_[l];
  }
  return r;
}

void PermGroup::unrank_into(std::uint64_t rank, Point* out) const {
  std::iota(out, out + degree_, Point{0});
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const std::size_t idx = (rank / strides_[l]) % levels_[l].orbit.size();
    const auto u = levels_[l].transversal[idx].images();
    for (std::size_t p = 0; p < degree_; ++p) out[p] = u[out[p]];
  }
}

Permutation PermGroup::unrank(std::uint64_t rank) const {
  std::vector<Point> images(degree_);
  unrank_into(rank, images.data());
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation ElementList::permutation(std::size_t i) const {
  const auto span = (*this)[i];
  return Permutation(std::vector<Point>(span.begin(), span.end()), Permutation::Unchecked{});
}

ElementList enumerate_elements(const PermGroup& group, std::uint64_t cap) {
  if (group.order() > cap) throw CapacityError(group.order(), cap);
  const std::size_t n = group.degree();
  std::vector<Point> data(static_cast<std::size_t>(group.order()) * n);
  for (std::uint64_t r = 0; r < group.order(); ++r) {
    group.unrank_into(r, data.data() + r * n);
  }
  return ElementList(n, std::move(data));
}

std::size_t ConjugacyClasses::class_of(const Permutation& g) const {
  return class_of_[group_.rank(g)];
}

std::size_t ConjugacyClasses::power_map(std::size_t i, std::int64_t l) const {
  const auto o = static_cast<std::int64_t>(classes_[i].element_order);
  std::int64_t e = l % o;
  if (e < 0) e += o;
  return power_maps_[i][static_cast<std::size_t>(e)];
}

ConjugacyClasses conjugacy_classes(const PermGroup& group, const ElementList& elements) {
  const auto order = static_cast<std::size_t>(group.order());
  const std::size_t n = group.degree();
  const auto& base = group.base();
  const std::size_t m = base.size();

  std::vector<Permutation> gens = group.generators();
  std::vector<Permutation> gen_inverses;
  for (const auto& s : gens) gen_inverses.push_back(s.inverse());

  std::vector<std::int32_t> raw_class(order, -1);
  std::vector<std::vector<std::uint32_t>> raw_members;
  std::vector<std::uint32_t> queue;
  std::array<Point, kMaxBaseLength> images{};
  for (std::size_t start = 0; start < order; ++start) {
    if (raw_class[start] >= 0) continue;
    const auto id = static_cast<std::int32_t>(raw_members.size());
    queue.assign(1, static_cast<std::uint32_t>(start));
    raw_class[start] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Point* x = elements.raw(queue[q]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        // s^-1 x s sends b to s(x(s^-1(b))).
        for (std::size_t l = 0; l < m; ++l) images[l] = gens[s](x[gen_inverses[s](base[l])]);
        const auto r = static_cast<std::size_t>(group.rank_from_base_images(images.data()));
        if (raw_class[r] < 0) {
          raw_class[r] = id;
          queue.push_back(static_cast<std::uint32_t>(r));
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    raw_members.push_back(queue);
  }

  struct Candidate {
    std::uint64_t element_order;
    std::uint64_t size;
    std::uint32_t smallest;
    std::size_t raw_id;
  };
  std::vector<Candidate> candidates;
  for (std::size_t id = 0; id < raw_members.size(); ++id) {
    std::uint32_t smallest = raw_members[id].front();
    for (std::uint32_t e : raw_members[id]) {
      const auto a = elements[e];
      const auto b = elements[smallest];
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) smallest = e;
    }
    candidates.push_back({order_of(elements[smallest]), raw_members[id].size(), smallest, id});
  }
  std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    const auto x = elements[a.smallest];
    const auto y = elements[b.smallest];
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  if (candidates.size() > 65535) throw CapacityError(candidates.size(), 65535);

  ConjugacyClasses result;
  result.group_ = group;
  std::vector<std::size_t> relabel(candidates.size());
  result.member_offsets_.push_back(0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    relabel[c.raw_id] = i;
    ConjugacyClass cls;
    cls.representative = elements.permutation(c.smallest);
    cls.size = c.size;
    cls.element_order = c.element_order;
    cls.centralizer_order = group.order() / c.size;
    result.classes_.push_back(std::move(cls));
    const auto& mem = raw_members[c.raw_id];
    result.members_.insert(result.members_.end(), mem.begin(), mem.end());
    result.member_offsets_.push_back(result.members_.size());
    result.exponent_ = std::lcm(result.exponent_, c.element_order);
  }
  result.class_of_.resize(order);
  for (std::size_t e = 0; e < order; ++e) {
    result.class_of_[e] = static_cast<std::uint16_t>(relabel[static_cast<std::size_t>(raw_class[e])]);
  }
  for (const auto& cls : result.classes_) {
    std::vector<std::uint16_t> powers;
    Permutation current = Permutation::identity(n);
    for (std::uint64_t l = 0; l < cls.element_order; ++l) {
      for (std::size_t b = 0; b < m; ++b) images[b] = current(base[b]);
      powers.push_back(result.class_of_[group.rank_from_base_images(images.data())]);
      current = current * cls.representative;
    }
    result.power_maps_.push_back(std::move(powers));
  }
  return result;
}

PermGroup subgroup(const PermGroup& group, std::vector<Permutation> generators) {
  return PermGroup::build(std::move(generators), group.degree());
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seed) {
  std::vector<Permutation> gens;
  for (const auto& s : seed) {
    if (!group.contains(s)) {
      throw NotAMemberError("seed element " + s.to_cycle_string() + " is not a group member");
    }
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup closure = PermGroup::build(gens, group.degree());
  std::vector<Permutation> queue = closure.generators();
  while (!queue.empty()) {
    Permutation x = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : group.generators()) {
      Permutation c = x.conjugate_by(g);
      if (closure.contains(c)) continue;
      gens.push_back(c);
      closure = PermGroup::build(gens, group.degree());
      queue.push_back(std::move(c));
    }
  }
  return closure;
}

bool is_simple(const PermGroup& group, const ConjugacyClasses& classes) {
  if (group.order() == 1) throw DomainError("the trivial group is not simple by convention");
  for (std::size_t i = 1; i < classes.count(); ++i) {
    if (normal_closure(group, {classes[i].representative}).order() != group.order()) {
      return false;
    }
  }
  return true;
}

bool is_simple(const PermGroup& group) {
  if (group.order() == 1) throw DomainError("the trivial group is not simple by convention");
  const ElementList elements = enumerate_elements(group);
  return is_simple(group, conjugacy_classes(group, elements));
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> commutators;
  const auto& gens = group.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Permutation c = commutator(gens[a], gens[b]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(group, commutators);
}

bool is_solvable(const PermGroup& group) {
  PermGroup current = group;
  while (current.order() > 1) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n > 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

namespace {

bool normalizes(const Permutation& x, const PermGroup& p) {
  for (const auto& gen : p.generators()) {
    if (!p.contains(gen.conjugate_by(x))) return false;
  }
  return true;
}

}  // namespace

Sylow2 sylow_2(const PermGroup& group, const ElementList& elements) {
  const std::uint64_t target = p_part(group.order(), 2);
  Sylow2 result{PermGroup::trivial(group.degree()), true, true};
  if (target == 1) return result;

  std::size_t best = 0;
  std::uint64_t best_order = 1;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const std::uint64_t o = order_of(elements[e]);
    if (is_power_of_two(o) && o > best_order) {
      best_order = o;
      best = e;
    }
  }
  std::vector<Permutation> gens{elements.permutation(best)};
  PermGroup p = PermGroup::build(gens, group.degree());
  while (p.order() < target) {
    bool extended = false;
    for (std::size_t e = 1; e < elements.size(); ++e) {
      if (!is_power_of_two(order_of(elements[e]))) continue;
      Permutation x = elements.permutation(e);
      if (p.contains(x) || !normalizes(x, p)) continue;
      gens.push_back(std::move(x));
      p = PermGroup::build(gens, group.degree());
      extended = true;
      break;
    }
    if (!extended) throw InternalError("Sylow 2-subgroup construction stalled");
  }
  result.is_abelian = p.is_abelian();
  result.is_normal = true;
  for (const auto& g : group.generators()) {
    if (!normalizes(g, p)) {
      result.is_normal = false;
      break;
    }
  }
  result.subgroup = std::move(p);
  return result;
}

Sylow2 sylow_2(const PermGroup& group) { return sylow_2(group, enumerate_elements(group)); }

}  // namespace charzero
