#include "exchci/model.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace exchci {

namespace {

constexpr std::uint64_t kDenseBitCap = std::uint64_t{1} << 28;  // 32 MiB of bits

const char* kPropertyNames[] = {
    "symmetry",      "decomposition", "weak-union",
    "contraction",   "intersection",  "composition",
    "singleton-transitivity", "upward-stability", "downward-stability",
};

}  // namespace

std::string_view property_name(Property p) { return kPropertyNames[int(p)]; }

std::optional<Property> property_from_name(std::string_view s) {
  for (int k = 0; k < 9; ++k)
    if (s == kPropertyNames[k]) return Property(k);
  return std::nullopt;
}

Statement::Statement(VarSet a_, VarSet b_, VarSet c_) : a(a_), b(b_), c(c_) {
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw std::invalid_argument("statement parts must be pairwise disjoint");
  if (b.bits() < a.bits()) std::swap(a, b);
}

IndependenceModel::IndependenceModel(GroundSet ground) : ground_(std::move(ground)) {
  int s = ground_.size();
  pair_count_ = s * (s - 1) / 2;
  std::uint64_t bits = std::uint64_t(pair_count_) << s;
  dense_ = bits <= kDenseBitCap;
  if (dense_) dense_bits_.assign(std::size_t((bits + 63) / 64), 0);
}

void IndependenceModel::check_elem(int u, int v, VarSet c) const {
  int s = ground_.size();
  if (u < 0 || v < 0 || u >= s || v >= s || u == v)
    throw std::invalid_argument("elementary statement needs two distinct ground elements");
  if (!c.subset_of(ground_.all()) || c.contains(u) || c.contains(v))
    throw std::invalid_argument("conditioning set overlaps the pair or leaves the ground");
}

std::uint64_t IndependenceModel::key(int u, int v, VarSet c) const {
  if (u > v) std::swap(u, v);
  int s = ground_.size();
  std::uint64_t pair = std::uint64_t(u) * s - std::uint64_t(u) * (u + 1) / 2 + (v - u - 1);
  return (pair << s) | c.bits();
}

bool IndependenceModel::contains(int u, int v, VarSet c) const {
  check_elem(u, v, c);
  std::uint64_t k = key(u, v, c);
  if (dense_) return (dense_bits_[k >> 6] >> (k & 63)) & 1;
  return sparse_.count(k) != 0;
}

bool IndependenceModel::insert(int u, int v, VarSet c) {
  check_elem(u, v, c);
  std::uint64_t k = key(u, v, c);
  if (dense_) {
    std::uint64_t& w = dense_bits_[k >> 6];
    std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (w & bit) return false;
    w |= bit;
  } else {
    if (!sparse_.insert(k).second) return false;
  }
  ++count_;
  return true;
}

void IndependenceModel::insert(const Statement& st) {
  if (st.a.empty() || st.b.empty()) return;  // implicitly true
  if (!st.a.subset_of(ground_.all()) || !st.b.subset_of(ground_.all()) ||
      !st.c.subset_of(ground_.all()))
    throw std::invalid_argument("statement leaves the ground set");
  st.a.for_each([&](int u) {
    st.b.for_each([&](int v) {
      std::uint32_t am = st.a.without(u).bits(), bm = st.b.without(v).bits();
      std::uint32_t x = am;
      while (true) {
        std::uint32_t y = bm;
        while (true) {
          insert(u, v, st.c | VarSet::of_bits(x) | VarSet::of_bits(y));
          if (y == 0) break;
          y = (y - 1) & bm;
        }
        if (x == 0) break;
        x = (x - 1) & am;
      }
    });
  });
}

bool IndependenceModel::holds(VarSet a, VarSet b, VarSet c) const {
  if (!a.subset_of(ground_.all()) || !b.subset_of(ground_.all()) || !c.subset_of(ground_.all()))
    throw std::invalid_argument("statement leaves the ground set");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw std::invalid_argument("statement parts must be pairwise disjoint");
  if (a.empty() || b.empty()) return true;
  bool ok = true;
  a.for_each([&](int u) {
    if (!ok) return;
    b.for_each([&](int v) {
      if (!ok) return;
      std::uint32_t am = a.without(u).bits(), bm = b.without(v).bits();
      std::uint32_t x = am;
      while (ok) {
        std::uint32_t y = bm;
        while (true) {
          if (!contains(u, v, c | VarSet::of_bits(x) | VarSet::of_bits(y))) {
            ok = false;
            break;
          }
          if (y == 0) break;
          y = (y - 1) & bm;
        }
        if (x == 0) break;
        x = (x - 1) & am;
      }
    });
  });
  return ok;
}

void IndependenceModel::for_each_elementary(
    const std::function<void(int, int, VarSet)>& fn) const {
  int s = ground_.size();
  auto emit = [&](std::uint64_t k) {
    std::uint64_t pair = k >> s;
    std::uint32_t cond = std::uint32_t(k & ((std::uint64_t{1} << s) - 1));
    // invert the pair index
    int u = 0;
    std::uint64_t base = 0;
    while (base + std::uint64_t(s - 1 - u) <= pair) base += s - 1 - u, ++u;
    int v = int(pair - base) + u + 1;
    fn(u, v, VarSet::of_bits(cond));
  };
  if (dense_) {
    for (std::size_t w = 0; w < dense_bits_.size(); ++w) {
      std::uint64_t word = dense_bits_[w];
      while (word != 0) {
        int b = std::countr_zero(word);
        word &= word - 1;
        emit((std::uint64_t(w) << 6) | std::uint64_t(b));
      }
    }
  } else {
    for (std::uint64_t k : sparse_) emit(k);
  }
}

std::vector<Statement> IndependenceModel::statements() const {
  std::vector<Statement> out;
  out.reserve(count_);
  for_each_elementary([&](int u, int v, VarSet c) {
    out.emplace_back(VarSet::single(u), VarSet::single(v), c);
  });
  return out;  // iteration is already in ascending (u, v, C) key order
}

bool operator==(const IndependenceModel& x, const IndependenceModel& y) {
  if (!(x.ground_ == y.ground_) || x.count_ != y.count_) return false;
  if (x.dense_) return x.dense_bits_ == y.dense_bits_;
  return x.sparse_ == y.sparse_;
}

namespace {

// Drives the exchange rule from every stored statement as first antecedent:
//   <u,v|Cw> and <u,w|C>  =>  <u,w|Cv> and <u,v|C>.
// Returns whether anything was added; with add==false merely reports whether
// anything *would* be added.
bool exchange_pass(IndependenceModel& m, bool add) {
  bool changed = false;
  auto stmts = m.statements();
  for (const auto& st : stmts) {
    int p = st.a.lowest(), q = st.b.lowest();
    for (int side = 0; side < 2; ++side) {
      int u = side == 0 ? p : q;
      int v = side == 0 ? q : p;
      bool done = false;
      st.c.for_each([&](int w) {
        if (done) return;
        VarSet c = st.c.without(w);
        if (!m.contains(u, w, c)) return;
        if (!m.contains(u, w, c.with(v)) || !m.contains(u, v, c)) {
          changed = true;
          if (!add) {
            done = true;
            return;
          }
          m.insert(u, w, c.with(v));
          m.insert(u, v, c);
        }
      });
      if (done) return true;
    }
  }
  return changed;
}

}  // namespace

bool is_semigraphoid_closed(const IndependenceModel& m) {
  IndependenceModel copy = m;
  return !exchange_pass(copy, false);
}

IndependenceModel semigraphoid_closure(const IndependenceModel& m) {
  IndependenceModel r = m;
  while (exchange_pass(r, true)) {
  }
  return r;
}

namespace {

bool upward_pass(IndependenceModel& m) {
  bool changed = false;
  for (const auto& st : m.statements()) {
    int u = st.a.lowest(), v = st.b.lowest();
    VarSet out = m.ground().all() - st.c - st.a - st.b;
    out.for_each([&](int w) { changed |= m.insert(u, v, st.c.with(w)); });
  }
  return changed;
}

bool downward_pass(IndependenceModel& m) {
  bool changed = false;
  for (const auto& st : m.statements()) {
    int u = st.a.lowest(), v = st.b.lowest();
    st.c.for_each([&](int w) { changed |= m.insert(u, v, st.c.without(w)); });
  }
  return changed;
}

bool singleton_transitivity_pass(IndependenceModel& m) {
  bool changed = false;
  for (const auto& st : m.statements()) {
    int u = st.a.lowest(), v = st.b.lowest();
    VarSet out = m.ground().all() - st.c - st.a - st.b;
    out.for_each([&](int w) {
      if (!m.contains(u, v, st.c.with(w))) return;
      if (m.contains(u, w, st.c) || m.contains(v, w, st.c)) return;
      // no least fixpoint for a disjunction: deterministically prefer the
      // consequent with the smaller (u, v) pair encoding
      int a1 = std::min(u, w), b1 = std::max(u, w);
      int a2 = std::min(v, w), b2 = std::max(v, w);
      bool first = a1 != a2 ? a1 < a2 : b1 < b2;
      changed |= first ? m.insert(u, w, st.c) : m.insert(v, w, st.c);
    });
  }
  return changed;
}

// Enumerates assignments of every ground element to {A, B, C, D, out} and
// fires `fn(A,B,C,D)`; fn returns false to abort the scan.
template <class F>
bool scan_partitions(const GroundSet& g, F fn) {
  int s = g.size();
  std::array<std::uint32_t, 4> part{0, 0, 0, 0};
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == s) return fn(VarSet::of_bits(part[0]), VarSet::of_bits(part[1]),
                          VarSet::of_bits(part[2]), VarSet::of_bits(part[3]));
    for (int k = 0; k < 4; ++k) {
      part[k] |= std::uint32_t{1} << e;
      if (!rec(e + 1)) return false;
      part[k] &= ~(std::uint32_t{1} << e);
    }
    return rec(e + 1);  // element unused
  };
  return rec(0);
}

bool intersection_pass(IndependenceModel& m) {
  bool changed = false;
  scan_partitions(m.ground(), [&](VarSet a, VarSet b, VarSet c, VarSet d) {
    if (a.empty() || b.empty() || d.empty()) return true;
    if (b.lowest() > d.lowest()) return true;  // B<->D symmetric
    if (m.holds(a, b, c | d) && m.holds(a, d, c | b) && !m.holds(a, b | d, c)) {
      m.insert(Statement(a, b | d, c));
      changed = true;
    }
    return true;
  });
  return changed;
}

bool composition_pass(IndependenceModel& m) {
  bool changed = false;
  scan_partitions(m.ground(), [&](VarSet a, VarSet b, VarSet c, VarSet d) {
    if (a.empty() || b.empty() || d.empty()) return true;
    if (b.lowest() > d.lowest()) return true;  // B<->D symmetric
    if (m.holds(a, b, c) && m.holds(a, d, c) && !m.holds(a, b | d, c)) {
      m.insert(Statement(a, b | d, c));
      changed = true;
    }
    return true;
  });
  return changed;
}

}  // namespace

IndependenceModel closure_with(const IndependenceModel& m, const std::vector<Property>& extra) {
  for (Property p : extra) {
    switch (p) {
      case Property::Intersection:
      case Property::Composition:
      case Property::SingletonTransitivity:
      case Property::UpwardStability:
      case Property::DownwardStability:
        break;
      default:
        throw std::invalid_argument("closure_with: rule must be one of intersection, "
                                    "composition, singleton-transitivity, upward-stability, "
                                    "downward-stability");
    }
  }
  IndependenceModel r = semigraphoid_closure(m);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Property p : extra) {
      bool c = false;
      switch (p) {
        case Property::Intersection: c = intersection_pass(r); break;
        case Property::Composition: c = composition_pass(r); break;
        case Property::SingletonTransitivity: c = singleton_transitivity_pass(r); break;
        case Property::UpwardStability: c = upward_pass(r); break;
        case Property::DownwardStability: c = downward_pass(r); break;
        default: break;
      }
      if (c) {
        while (exchange_pass(r, true)) {
        }
        changed = true;
      }
    }
  }
  return r;
}

namespace {

PropertyReport fail_report(Property p, std::vector<Statement> ante, std::vector<Statement> cons) {
  PropertyReport r;
  r.property = p;
  r.holds = false;
  r.witness = PropertyWitness{std::move(ante), std::move(cons)};
  return r;
}

// Shared shape of the five two-antecedent subset rules.
PropertyReport check_subset_rule(const IndependenceModel& m, Property p) {
  PropertyReport rep;
  rep.property = p;
  rep.holds = true;
  scan_partitions(m.ground(), [&](VarSet a, VarSet b, VarSet c, VarSet d) {
    if (a.empty() || b.empty() || d.empty()) return true;
    bool symmetric = p == Property::Intersection || p == Property::Composition;
    if (symmetric && b.lowest() > d.lowest()) return true;
    std::vector<Statement> ante;
    Statement cons;
    switch (p) {
      case Property::Decomposition:
        ante = {Statement(a, b | d, c)};
        cons = Statement(a, b, c);
        break;
      case Property::WeakUnion:
        ante = {Statement(a, b | d, c)};
        cons = Statement(a, b, c | d);
        break;
      case Property::Contraction:
        ante = {Statement(a, b, c | d), Statement(a, d, c)};
        cons = Statement(a, b | d, c);
        break;
      case Property::Intersection:
        ante = {Statement(a, b, c | d), Statement(a, d, c | b)};
        cons = Statement(a, b | d, c);
        break;
      case Property::Composition:
        ante = {Statement(a, b, c), Statement(a, d, c)};
        cons = Statement(a, b | d, c);
        break;
      default:
        return false;
    }
    for (const auto& s : ante)
      if (!m.holds(s)) return true;
    if (m.holds(cons)) return true;
    rep = fail_report(p, std::move(ante), {cons});
    return false;
  });
  return rep;
}

}  // namespace

PropertyReport check_property(const IndependenceModel& m, Property p) {
  if (!is_semigraphoid_closed(m))
    throw std::domain_error("check_property requires a semigraphoid-closed model");
  PropertyReport rep;
  rep.property = p;
  rep.holds = true;
  int s = m.ground().size();
  switch (p) {
    case Property::Symmetry:
      return rep;  // storage is unordered in (u, v): symmetric by construction
    case Property::Decomposition:
    case Property::WeakUnion:
    case Property::Contraction:
    case Property::Intersection:
    case Property::Composition:
      return check_subset_rule(m, p);
    case Property::SingletonTransitivity: {
      for (int u = 0; u < s && rep.holds; ++u)
        for (int v = u + 1; v < s && rep.holds; ++v)
          for (int w = 0; w < s && rep.holds; ++w) {
            if (w == u || w == v) continue;
            VarSet rest = m.ground().all().without(u).without(v).without(w);
            std::uint32_t mask = rest.bits();
            std::uint32_t cbits = 0;
            while (rep.holds) {
              VarSet c = VarSet::of_bits(cbits);
              if (m.contains(u, v, c) && m.contains(u, v, c.with(w)) &&
                  !m.contains(u, w, c) && !m.contains(v, w, c)) {
                auto su = VarSet::single(u), sv = VarSet::single(v), sw = VarSet::single(w);
                rep = fail_report(p, {Statement(su, sv, c), Statement(su, sv, c.with(w))},
                                  {Statement(su, sw, c), Statement(sv, sw, c)});
              }
              if (cbits == mask) break;
              cbits = (cbits - mask) & mask;  // next submask in ascending order
            }
          }
      return rep;
    }
    case Property::UpwardStability: {
      for (const auto& st : m.statements()) {
        int u = st.a.lowest(), v = st.b.lowest();
        VarSet out = m.ground().all() - st.c - st.a - st.b;
        std::optional<int> bad;
        out.for_each([&](int w) {
          if (!bad && !m.contains(u, v, st.c.with(w))) bad = w;
        });
        if (bad)
          return fail_report(p, {st}, {Statement(st.a, st.b, st.c.with(*bad))});
      }
      return rep;
    }
    case Property::DownwardStability: {
      for (const auto& st : m.statements()) {
        int u = st.a.lowest(), v = st.b.lowest();
        std::optional<int> bad;
        st.c.for_each([&](int w) {
          if (!bad && !m.contains(u, v, st.c.without(w))) bad = w;
        });
        if (bad)
          return fail_report(p, {st}, {Statement(st.a, st.b, st.c.without(*bad))});
      }
      return rep;
    }
  }
  return rep;
}

IndependenceModel dual(const IndependenceModel& m) {
  IndependenceModel r(m.ground());
  VarSet all = m.ground().all();
  m.for_each_elementary([&](int u, int v, VarSet c) {
    r.insert(u, v, all - c - VarSet::single(u) - VarSet::single(v));
  });
  return r;
}

IndependenceModel permuted_model(const IndependenceModel& m,
                                 const std::vector<int>& element_perm) {
  if (int(element_perm.size()) != m.ground().size())
    throw std::invalid_argument("element permutation does not match ground");
  IndependenceModel r(m.ground());
  m.for_each_elementary([&](int u, int v, VarSet c) {
    r.insert(element_perm[u], element_perm[v], apply_elements(element_perm, c));
  });
  return r;
}

}  // namespace exchci
