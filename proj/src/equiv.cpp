#include "grpdlim/equiv.hpp"

#include <algorithm>
#include <sstream>

namespace grpdlim {

const char* to_string(EquivalenceViolation v) {
  switch (v) {
    case EquivalenceViolation::None: return "none";
    case EquivalenceViolation::NotEssentiallySurjective: return "not essentially surjective";
    case EquivalenceViolation::NotFaithful: return "not faithful";
    case EquivalenceViolation::NotFull: return "not full";
  }
  return "unknown";
}

std::string EquivalenceCertificate::describe() const {
  if (equivalence) return "equivalence";
  std::ostringstream out;
  out << to_string(violation);
  const auto& v = violation_indices;
  switch (violation) {
    case EquivalenceViolation::NotEssentiallySurjective:
      out << " at target object " << v[0];
      break;
    case EquivalenceViolation::NotFaithful:
      out << " at (" << v[0] << ", " << v[1] << "): morphisms " << v[2] << " and " << v[3]
          << " have the same image";
      break;
    case EquivalenceViolation::NotFull:
      out << " at (" << v[0] << ", " << v[1] << "): target morphism " << v[2] << " is not hit";
      break;
    case EquivalenceViolation::None:
      break;
  }
  return out.str();
}

namespace {

std::vector<bool> isomorphism_flags(const FiniteCategory& c) {
  std::vector<bool> iso(c.morphism_count(), false);
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    if (iso[m]) continue;
    for (MorphismIndex n : c.out(c.dst(m))) {
      if (c.dst(n) != c.src(m)) continue;
      if (c.compose(m, n) == c.identity(c.src(m)) && c.compose(n, m) == c.identity(c.dst(m))) {
        iso[m] = iso[n] = true;
        break;
      }
    }
  }
  return iso;
}

}  // namespace

EquivalenceCertificate is_equivalence(const CatFunctor& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  EquivalenceCertificate cert;

  std::vector<SurjectivityWitness> witness(t.object_count(), {npos, npos});
  for (ObjectIndex x = 0; x < s.object_count(); ++x)
    if (witness[f.object(x)].source == npos)
      witness[f.object(x)] = {x, t.identity(f.object(x))};
  const auto iso = isomorphism_flags(t);
  for (ObjectIndex x = 0; x < s.object_count(); ++x)
    for (MorphismIndex m : t.out(f.object(x)))
      if (iso[m] && witness[t.dst(m)].source == npos) witness[t.dst(m)] = {x, m};
  for (ObjectIndex y = 0; y < t.object_count(); ++y)
    if (witness[y].source == npos) {
      cert.violation = EquivalenceViolation::NotEssentiallySurjective;
      cert.violation_indices = {y};
      return cert;
    }
  cert.witnesses = std::move(witness);

  // Hom-sets hom(x, y) are handled one at a time; `stamp` marks the images
  // of the current one.
  std::vector<std::uint64_t> stamp(t.morphism_count(), 0);
  std::vector<MorphismIndex> preimage(t.morphism_count(), npos);
  std::vector<std::size_t> available(t.object_count(), 0);
  std::vector<MorphismIndex> by_target;
  std::uint64_t token = 0;
  for (ObjectIndex x = 0; x < s.object_count(); ++x) {
    const auto fx = f.object(x);
    by_target.assign(s.out(x).begin(), s.out(x).end());
    std::stable_sort(by_target.begin(), by_target.end(),
                     [&](MorphismIndex a, MorphismIndex b) { return s.dst(a) < s.dst(b); });
    for (MorphismIndex m : t.out(fx)) ++available[t.dst(m)];
    std::size_t next = 0;
    for (ObjectIndex y = 0; y < s.object_count(); ++y) {
      ++token;
      std::size_t hits = 0;
      for (; next < by_target.size() && s.dst(by_target[next]) == y; ++next) {
        const auto m = by_target[next];
        const auto image = f.morphism(m);
        if (stamp[image] == token) {
          cert.violation = EquivalenceViolation::NotFaithful;
          cert.violation_indices = {x, y, preimage[image], m};
          cert.witnesses.clear();
          return cert;
        }
        stamp[image] = token;
        preimage[image] = m;
        ++hits;
      }
      if (hits == available[f.object(y)]) {
        if (hits > 0) cert.hom_bijections.push_back({x, y, hits});
        continue;
      }
      for (MorphismIndex m : t.out(fx))
        if (t.dst(m) == f.object(y) && stamp[m] != token) {
          cert.violation = EquivalenceViolation::NotFull;
          cert.violation_indices = {x, y, m};
          cert.witnesses.clear();
          return cert;
        }
    }
    for (MorphismIndex m : t.out(fx)) available[t.dst(m)] = 0;
  }
  cert.equivalence = true;
  return cert;
}

std::string FibrationCertificate::describe() const {
  if (fibration) return "fibration";
  std::ostringstream out;
  out << "no lift of target morphism " << counterexample->second << " out of source object "
      << counterexample->first;
  return out.str();
}

FibrationCertificate is_fibration(const CatFunctor& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  const auto source_iso = isomorphism_flags(s);
  const auto target_iso = isomorphism_flags(t);
  FibrationCertificate cert;
  std::vector<ObjectIndex> stamp(t.morphism_count(), npos);
  for (ObjectIndex x = 0; x < s.object_count(); ++x) {
    for (MorphismIndex m : s.out(x))
      if (source_iso[m]) stamp[f.morphism(m)] = x;
    for (MorphismIndex a : t.out(f.object(x))) {
      if (!target_iso[a]) continue;
      if (stamp[a] != x) {
        cert.counterexample = std::make_pair(x, a);
        return cert;
      }
      ++cert.lifted;
    }
  }
  cert.fibration = true;
  return cert;
}

AcyclicFibrationCertificate is_acyclic_fibration(const CatFunctor& f) {
  return {is_equivalence(f), is_fibration(f)};
}

Subgroup automorphism_group(const Groupoid& g, ObjectIndex x) {
  auto elements = g.hom(x, x);
  std::vector<std::uint32_t> position(g.morphism_count(), npos);
  for (std::uint32_t i = 0; i < elements.size(); ++i) position[elements[i]] = i;
  std::vector<std::vector<ElementIndex>> table(elements.size(),
                                               std::vector<ElementIndex>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      table[a][b] = position[g.compose(elements[b], elements[a])];
  return {FiniteGroup::from_table(std::move(table)), std::move(elements)};
}

SkeletonReport skeleton(const Groupoid& g) {
  SkeletonReport r;
  r.class_of = connected_components(g.category());
  std::size_t count = 0;
  for (auto c : r.class_of) count = std::max<std::size_t>(count, c + 1);
  r.classes.resize(count);
  for (ObjectIndex x = 0; x < g.object_count(); ++x) r.classes[r.class_of[x]].push_back(x);
  r.transport.assign(g.object_count(), npos);
  std::vector<Groupoid> parts;
  for (const auto& cls : r.classes) {
    const auto rep = cls.front();
    r.representatives.push_back(rep);
    r.transport[rep] = g.identity(rep);
    std::vector<ObjectIndex> queue{rep};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (MorphismIndex m : g.out(queue[i]))
        if (r.transport[g.dst(m)] == npos) {
          r.transport[g.dst(m)] = g.compose(r.transport[queue[i]], m);
          queue.push_back(g.dst(m));
        }
    r.automorphism_groups.push_back(automorphism_group(g, rep));
    parts.push_back(delooping(r.automorphism_groups.back().group));
  }
  r.model = disjoint_union(parts);

  std::vector<std::vector<std::uint32_t>> position(count);
  for (std::size_t c = 0; c < count; ++c) {
    position[c].assign(g.morphism_count(), npos);
    const auto& emb = r.automorphism_groups[c].embedding;
    for (std::uint32_t i = 0; i < emb.size(); ++i) position[c][emb[i]] = i;
  }
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  for (ObjectIndex x = 0; x < objects.size(); ++x)
    objects[x] = r.model.object_offset[r.class_of[x]];
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const auto c = r.class_of[g.src(m)];
    const auto loop = g.compose(g.compose(r.transport[g.src(m)], m),
                                g.inverse(r.transport[g.dst(m)]));
    morphisms[m] = r.model.morphism_offset[c] + position[c][loop];
  }
  r.to_model = CatFunctor(g.category(), r.model.groupoid.category(), std::move(objects),
                          std::move(morphisms));
  r.certificate = is_equivalence(r.to_model);
  return r;
}

EquivalenceComparison are_equivalent(const Groupoid& x, const Groupoid& y, Budget budget) {
  EquivalenceComparison result;
  const auto sx = skeleton(x);
  const auto sy = skeleton(y);
  const std::size_t n = sx.classes.size();
  if (n != sy.classes.size()) {
    result.reason = "different numbers of isomorphism classes";
    return result;
  }
  std::vector<std::vector<int>> iso(n, std::vector<int>(n, -1));
  auto isomorphic = [&](std::size_t i, std::size_t j) {
    if (iso[i][j] < 0) {
      const auto& a = sx.automorphism_groups[i].group;
      const auto& b = sy.automorphism_groups[j].group;
      iso[i][j] = find_group_isomorphism(a, b, budget).has_value() ? 1 : 0;
    }
    return iso[i][j] == 1;
  };
  std::vector<std::size_t> matching(n, npos);
  std::vector<bool> used(n, false);
  auto match = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !isomorphic(i, j)) continue;
      used[j] = true;
      matching[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!match(match, 0)) {
    result.reason = "automorphism groups cannot be paired up to isomorphism";
    return result;
  }
  result.equivalent = true;
  result.matching = std::move(matching);
  return result;
}

}  // namespace grpdlim
