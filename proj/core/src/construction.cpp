#include "ddgraph/construction.hpp"

#include <algorithm>

#include "ddgraph/errors.hpp"
#include "ddgraph/finite_field.hpp"

namespace ddgraph {

BijectionFamily::BijectionFamily(int classes, int labels)
    : classes_(classes), labels_(labels) {
  if (classes < 1 || labels < 1) fail(ErrorKind::BadBijection, "empty frame");
}

void BijectionFamily::set(int i, int j, std::vector<int> perm) {
  if (i < 0 || j < 0 || i >= classes_ || j >= classes_)
    fail(ErrorKind::BadBijection, "class index out of range");
  if (i == j) fail(ErrorKind::BadBijection, "diagonal must stay the identity");
  if (static_cast<int>(perm.size()) != labels_)
    fail(ErrorKind::BadBijection, "permutation has wrong length");
  std::vector<int> seen(labels_, 0);
  for (int x : perm) {
    if (x < 0 || x >= labels_ || seen[x]++)
      fail(ErrorKind::BadBijection, "not a permutation of block labels");
  }
  if (i > j) {
    std::vector<int> inv(labels_);
    for (int a = 0; a < labels_; ++a) inv[perm[a]] = a;
    perm.swap(inv);
    std::swap(i, j);
  }
  std::vector<int> inv(labels_);
  for (int a = 0; a < labels_; ++a) inv[perm[a]] = a;
  perms_[{i, j}] = std::move(perm);
  inv_[{i, j}] = std::move(inv);
}

bool BijectionFamily::is_set(int i, int j) const {
  if (i > j) std::swap(i, j);
  return perms_.count({i, j}) > 0;
}

int BijectionFamily::apply(int i, int j, int label) const {
  if (perms_.empty()) return label;
  if (label < 0 || label >= labels_)
    fail(ErrorKind::BadBijection, "block label out of range");
  if (i == j) return label;
  if (i < j) {
    auto it = perms_.find({i, j});
    return it == perms_.end() ? label : it->second[label];
  }
  auto it = inv_.find({j, i});
  return it == inv_.end() ? label : it->second[label];
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > 10000) fail(ErrorKind::TooLarge, "class size limit exceeded");
  }
  return r;
}

// Derive d >= 2 from a design's replication structure: r must be q^(d-2).
int derive_dimension(int q, int r) {
  int d = 2;
  long long p = 1;
  while (p < r) {
    p *= q;
    ++d;
    if (d > 40) fail(ErrorKind::WrongParameters, "replication not a power of the block count");
  }
  if (p != r)
    fail(ErrorKind::WrongParameters,
         "replication " + std::to_string(r) + " is not a power of " + std::to_string(q));
  return d;
}

struct Frame {
  int q = 0;
  int d = 0;
  int classes_per_design = 0;  // parallel classes in each design
  long long points = 0;        // q^d
};

Frame validate_designs(const std::vector<AffineDesign>& designs) {
  if (designs.empty()) fail(ErrorKind::DimensionMismatch, "no designs supplied");
  const AffineDesign& first = designs.front();
  Frame fr;
  fr.q = first.q();
  fr.d = derive_dimension(first.q(), first.r());
  fr.classes_per_design = first.class_count();
  fr.points = first.points();
  for (const AffineDesign& des : designs) {
    if (des.q() != first.q() || des.r() != first.r() ||
        des.class_count() != first.class_count() || des.points() != first.points())
      fail(ErrorKind::ParameterMismatch, "designs disagree on (q, r, classes, points)");
    verify_affine(des);
  }
  return fr;
}

std::vector<std::vector<int>> resolve_numbering(const ConstructionSpec& spec,
                                                const std::vector<int>& kept,
                                                int classes_per_design) {
  std::vector<std::vector<int>> out(kept.size());
  if (spec.numbering.empty()) {
    for (auto& v : out) {
      v.resize(classes_per_design);
      for (int s = 0; s < classes_per_design; ++s) v[s] = s;
    }
    return out;
  }
  if (spec.numbering.size() != spec.designs.size())
    fail(ErrorKind::DimensionMismatch, "one class numbering per design required");
  for (size_t ki = 0; ki < kept.size(); ++ki) {
    const std::vector<int>& perm = spec.numbering[kept[ki]];
    std::vector<int>& v = out[ki];
    v.resize(classes_per_design);
    if (perm.empty()) {
      for (int s = 0; s < classes_per_design; ++s) v[s] = s;
      continue;
    }
    if (static_cast<int>(perm.size()) != classes_per_design)
      fail(ErrorKind::DimensionMismatch, "class numbering has wrong length");
    std::vector<int> seen(classes_per_design, 0);
    for (int s = 0; s < classes_per_design; ++s) {
      if (perm[s] < 0 || perm[s] >= classes_per_design || seen[perm[s]]++)
        fail(ErrorKind::BadBijection, "class numbering is not a permutation");
      v[s] = perm[s];
    }
  }
  return out;
}

enum class SpecialRule { None, NoEdges, CompleteJoin };

// Shared assembly: kept designs, an effective symmetric selector square over
// their class symbols (plus at most one special symbol), per-design class
// numbering and cross-class block bijections.
Graph assemble(const std::vector<const AffineDesign*>& ds, const Square& sel,
               int special_symbol, SpecialRule rule,
               const std::vector<std::vector<int>>& numbering,
               const BijectionFamily& bij, long long points) {
  int t = static_cast<int>(ds.size());
  int p = static_cast<int>(points);
  if (!bij.trivial()) {
    if (bij.classes() != t) fail(ErrorKind::DimensionMismatch, "bijection frame size mismatch");
    if (bij.labels() != ds[0]->q())
      fail(ErrorKind::DimensionMismatch, "bijection label count mismatch");
  }
  Graph g(t * p);
  g.origin_class.assign(t * p, 0);
  for (int i = 0; i < t; ++i)
    for (int x = 0; x < p; ++x) g.origin_class[i * p + x] = i;

  std::vector<int> li(p), lj(p);
  for (int i = 0; i < t; ++i) {
    for (int j = i; j < t; ++j) {
      int s = sel.at(i, j);
      if (s == special_symbol) {
        if (bij.is_set(i, j)) fail(ErrorKind::BadBijection, "bijection set on a special pair");
        if (rule == SpecialRule::NoEdges) continue;
        // Complete join; the selector never maps a class to itself here.
        for (int x = 0; x < p; ++x)
          for (int y = 0; y < p; ++y) g.set_edge(i * p + x, j * p + y, true);
        continue;
      }
      int ci = numbering[i][s];
      int cj = numbering[j][s];
      for (int x = 0; x < p; ++x) li[x] = bij.apply(i, j, ds[i]->block_of(ci, x));
      if (i == j) {
        for (int x = 0; x < p; ++x)
          for (int y = x + 1; y < p; ++y)
            if (li[x] != li[y]) g.set_edge(i * p + x, i * p + y, true);
      } else {
        for (int y = 0; y < p; ++y) lj[y] = ds[j]->block_of(cj, y);
        for (int x = 0; x < p; ++x)
          for (int y = 0; y < p; ++y)
            if (li[x] != lj[y]) g.set_edge(i * p + x, j * p + y, true);
      }
    }
  }
  return g;
}

void check_selector(const Square& sel, int side) {
  if (sel.side != side)
    fail(ErrorKind::DimensionMismatch, "selector square has side " + std::to_string(sel.side) +
                                           ", expected " + std::to_string(side));
  if (!sel.latin) fail(ErrorKind::BadInput, "selector square is not Latin");
  if (!sel.symmetric) fail(ErrorKind::BadInput, "selector square is not symmetric");
}

ConstructionResult finish(int which, const Frame& fr, Graph g, Square effective,
                          std::vector<int> classes) {
  ConstructionResult res{std::move(g), expected_params(which, fr.q, fr.d), DdgParams{},
                         std::move(classes), std::move(effective)};
  res.params = res.expected.ddg;
  return res;
}

}  // namespace

ExpectedParams expected_params(int which, int q, int d) {
  if (which < 1 || which > 4) fail(ErrorKind::OutOfRange, "variant must be 1..4");
  if (d < 2) fail(ErrorKind::OutOfRange, "dimension must be at least 2");
  if (prime_power_split(q).first == 0)
    fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  long long qd = ipow(q, d);
  long long qd1 = ipow(q, d - 1);
  long long qd2 = ipow(q, d - 2);
  long long m1 = (qd - 1) / (q - 1);  // parallel classes of one design
  ExpectedParams ep;
  DdgParams& t = ep.ddg;
  switch (which) {
    case 1:
      t = {qd * m1, qd1 * (qd - 1), qd1 * (qd - qd1 - 1), qd2 * (q - 1) * (qd - 1), m1, qd};
      break;
    case 2: {
      long long m = q * q * (qd1 - 1) / (q - 1);
      t = {q * qd * (qd1 - 1) / (q - 1), qd * (qd1 - 1), qd * (qd1 - qd2 - 1),
           qd1 * (q - 1) * (qd1 - 1), m, qd1};
      break;
    }
    case 3:
      t = {qd * (qd + q - 2) / (q - 1), qd1 * (qd - 1), qd1 * (qd - qd1 - 1),
           qd1 * (q - 1) * (qd1 - 1), (qd + q - 2) / (q - 1), qd};
      break;
    case 4: {
      long long lam = qd1 * (q - 1) * (qd1 + 1);
      t = {qd * (qd + q - 2) / (q - 1), qd1 * (qd + q - 1), lam, lam, 1, 0};
      break;
    }
  }
  ep.srg = (t.lambda1 == t.lambda2);
  if (ep.srg) {
    ep.srg_params = {t.v, t.k, t.lambda1, t.lambda2};
    t.m = 1;
    t.n = t.v;
  }
  long long big_f = t.m * (t.n - 1);
  long long big_g = t.m - 1;
  std::vector<Eigenvalue> vals;
  vals.push_back(Eigenvalue{t.k, 1});
  auto add = [&vals](long long delta, long long total) {
    if (total <= 0) return;
    Eigenvalue e = delta == 0 ? Eigenvalue{0, 1} : make_eigenvalue(1, delta);
    if (std::find(vals.begin(), vals.end(), e) == vals.end()) vals.push_back(e);
    if (e.coef != 0) {
      e.coef = -e.coef;
      if (std::find(vals.begin(), vals.end(), e) == vals.end()) vals.push_back(e);
    }
  };
  add(t.theta_f_sq(), big_f);
  add(t.theta_g_sq(), big_g);
  std::sort(vals.begin(), vals.end());
  std::reverse(vals.begin(), vals.end());
  ep.distinct_eigenvalues = std::move(vals);
  return ep;
}

ConstructionResult construction1(const ConstructionSpec& spec) {
  Frame fr = validate_designs(spec.designs);
  if (static_cast<int>(spec.designs.size()) != fr.classes_per_design)
    fail(ErrorKind::DimensionMismatch, "variant one needs one design per parallel class");
  check_selector(spec.selector, fr.classes_per_design);
  std::vector<int> kept(spec.designs.size());
  std::vector<const AffineDesign*> ds;
  for (size_t i = 0; i < spec.designs.size(); ++i) {
    kept[i] = static_cast<int>(i);
    ds.push_back(&spec.designs[i]);
  }
  auto numbering = resolve_numbering(spec, kept, fr.classes_per_design);
  Graph g = assemble(ds, spec.selector, -1, SpecialRule::None, numbering, spec.bijections,
                     fr.points);
  std::vector<int> classes = g.origin_class;
  return finish(1, fr, std::move(g), spec.selector, std::move(classes));
}

ConstructionResult construction2(const ConstructionSpec& spec) {
  Frame fr = validate_designs(spec.designs);
  int ms = fr.classes_per_design;  // side of the uncut square
  if (static_cast<int>(spec.designs.size()) != ms)
    fail(ErrorKind::DimensionMismatch, "variant two needs one design per parallel class");
  check_selector(spec.selector, ms);
  if (spec.h < 0 || spec.h >= ms)
    fail(ErrorKind::IndexOutOfRange, "deleted row out of range");
  std::vector<std::uint8_t> mask = spec.mask;
  if (mask.empty()) mask.assign(ms - 1, 0);
  Square eff = derived_square(spec.selector, spec.h, mask);

  std::vector<int> kept;
  std::vector<const AffineDesign*> ds;
  for (int i = 0; i < ms; ++i) {
    if (i == spec.h) continue;
    kept.push_back(i);
    ds.push_back(&spec.designs[i]);
  }
  auto numbering = resolve_numbering(spec, kept, ms);
  Graph g = assemble(ds, eff, -1, SpecialRule::None, numbering, spec.bijections, fr.points);

  // The point partition: blocks of the one parallel class whose symbol is
  // missing from the corresponding row of the effective selector.
  int t = static_cast<int>(ds.size());
  int p = static_cast<int>(fr.points);
  int q = fr.q;
  std::vector<int> classes(t * p, -1);
  for (int i = 0; i < t; ++i) {
    std::vector<char> used(ms, 0);
    for (int j = 0; j < t; ++j) used[eff.at(i, j)] = 1;
    int missing = -1;
    for (int s = 0; s < ms; ++s)
      if (!used[s]) missing = s;
    int cls = numbering[i][missing];
    for (int x = 0; x < p; ++x) classes[i * p + x] = i * q + ds[i]->block_of(cls, x);
  }
  return finish(2, fr, std::move(g), eff, std::move(classes));
}

ConstructionResult construction3(const ConstructionSpec& spec) {
  Frame fr = validate_designs(spec.designs);
  int side = fr.classes_per_design + 1;
  if (static_cast<int>(spec.designs.size()) != side)
    fail(ErrorKind::DimensionMismatch, "variant three needs one design more than classes");
  check_selector(spec.selector, side);
  std::vector<int> kept(spec.designs.size());
  std::vector<const AffineDesign*> ds;
  for (size_t i = 0; i < spec.designs.size(); ++i) {
    kept[i] = static_cast<int>(i);
    ds.push_back(&spec.designs[i]);
  }
  auto numbering = resolve_numbering(spec, kept, fr.classes_per_design);
  Graph g = assemble(ds, spec.selector, fr.classes_per_design, SpecialRule::NoEdges, numbering,
                     spec.bijections, fr.points);
  std::vector<int> classes;
  if (fr.q == 2)
    classes.assign(g.n(), 0);
  else
    classes = g.origin_class;
  return finish(3, fr, std::move(g), spec.selector, std::move(classes));
}

ConstructionResult construction4(const ConstructionSpec& spec) {
  Frame fr = validate_designs(spec.designs);
  int side = fr.classes_per_design + 1;
  if (static_cast<int>(spec.designs.size()) != side)
    fail(ErrorKind::DimensionMismatch, "variant four needs one design more than classes");
  check_selector(spec.selector, side);
  if (!diagonal_avoids(spec.selector, fr.classes_per_design))
    fail(ErrorKind::DiagonalViolation, "special symbol sits on the selector diagonal");
  std::vector<int> kept(spec.designs.size());
  std::vector<const AffineDesign*> ds;
  for (size_t i = 0; i < spec.designs.size(); ++i) {
    kept[i] = static_cast<int>(i);
    ds.push_back(&spec.designs[i]);
  }
  auto numbering = resolve_numbering(spec, kept, fr.classes_per_design);
  Graph g = assemble(ds, spec.selector, fr.classes_per_design, SpecialRule::CompleteJoin,
                     numbering, spec.bijections, fr.points);
  std::vector<int> classes(g.n(), 0);
  return finish(4, fr, std::move(g), spec.selector, std::move(classes));
}

ConstructionResult construct(const ConstructionSpec& spec) {
  switch (spec.which) {
    case 1: return construction1(spec);
    case 2: return construction2(spec);
    case 3: return construction3(spec);
    case 4: return construction4(spec);
    default: fail(ErrorKind::OutOfRange, "variant must be 1..4");
  }
}

ConstructionSpec default_spec(int which, int q, int d, Square selector, int h,
                              std::vector<std::uint8_t> mask) {
  FiniteField f(q);
  AffineDesign base = affine_geometry_design(f, d);
  int count = base.class_count() + (which >= 3 ? 1 : 0);
  ConstructionSpec spec;
  spec.which = which;
  spec.designs.assign(count, base);
  spec.selector = std::move(selector);
  spec.h = h;
  spec.mask = std::move(mask);
  return spec;
}

}  // namespace ddgraph
