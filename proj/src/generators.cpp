#include "chevmor/generators.hpp"

#include <map>

namespace chevmor {

GenLabel make_root(GenKind kind, int i, int j, FieldElement t) {
  GenLabel lab;
  lab.kind = kind;
  lab.i = i;
  lab.j = j;
  lab.t = t;
  return lab;
}

GenLabel make_dz(int64_t e) {
  GenLabel lab;
  lab.kind = GenKind::DZ;
  lab.e = e;
  return lab;
}

GenLabel make_wl() {
  GenLabel lab;
  lab.kind = GenKind::WL;
  return lab;
}

void validate_label(const GroupId& G, const GenLabel& lab) {
  int l = G.rank;
  auto in_range = [&](int v, int hi) { return v >= 1 && v <= hi; };
  switch (lab.kind) {
    case GenKind::XPlain: {
      int hi = G.family == Family::A ? l + 1 : l;
      if (!in_range(lab.i, hi) || !in_range(lab.j, hi) || lab.i == lab.j)
        throw BadLabel("XPlain indices");
      return;
    }
    case GenKind::XUpper:
    case GenKind::XLower:
      if (G.family == Family::A) throw BadLabel("kind not valid for family A");
      if (!in_range(lab.i, l) || !in_range(lab.j, l) || lab.i >= lab.j)
        throw BadLabel("XUpper/XLower need i < j");
      return;
    case GenKind::XShortU:
    case GenKind::XShortL:
      if (G.family != Family::C) throw BadLabel("short roots exist only in family C");
      if (!in_range(lab.i, l)) throw BadLabel("short root index");
      return;
    case GenKind::XB0Up:
    case GenKind::XB0Lo:
      if (G.family != Family::B) throw BadLabel("0-index roots exist only in family B");
      if (!in_range(lab.i, l)) throw BadLabel("0-index root index");
      return;
    case GenKind::DZ:
    case GenKind::WL:
      if (G.family != Family::B && G.family != Family::D)
        throw BadLabel("d(zeta)/w_l exist only in families B and D");
      return;
  }
  throw BadLabel("unknown kind");
}

std::vector<SparseEntry> gen_entries(const GroupId& G, const GenLabel& lab) {
  validate_label(G, lab);
  const Field& F = G.field;
  int l = G.rank;
  int i = lab.i, j = lab.j;
  const FieldElement& t = lab.t;
  FieldElement mt = F.neg(t);
  std::vector<SparseEntry> s;
  switch (lab.kind) {
    case GenKind::XPlain:
      s.push_back({G.pos(i), G.pos(j), t});
      if (G.family != Family::A) s.push_back({G.pos(-j), G.pos(-i), mt});
      break;
    case GenKind::XUpper:
      s.push_back({G.pos(i), G.pos(-j), t});
      s.push_back({G.pos(j), G.pos(-i), G.family == Family::C ? t : mt});
      break;
    case GenKind::XLower:
      s.push_back({G.pos(-i), G.pos(j), t});
      s.push_back({G.pos(-j), G.pos(i), G.family == Family::C ? t : mt});
      break;
    case GenKind::XShortU:
      s.push_back({G.pos(i), G.pos(-i), t});
      break;
    case GenKind::XShortL:
      s.push_back({G.pos(-i), G.pos(i), t});
      break;
    case GenKind::XB0Up:
      // I + t(2e_{i,0} - e_{0,-i}) - t^2 e_{i,-i}
      s.push_back({G.pos(i), G.pos(0), F.add(t, t)});
      s.push_back({G.pos(0), G.pos(-i), mt});
      s.push_back({G.pos(i), G.pos(-i), F.neg(F.mul(t, t))});
      break;
    case GenKind::XB0Lo:
      // I + t(-2e_{-i,0} + e_{0,i}) - t^2 e_{-i,i}
      s.push_back({G.pos(-i), G.pos(0), F.neg(F.add(t, t))});
      s.push_back({G.pos(0), G.pos(i), t});
      s.push_back({G.pos(-i), G.pos(i), F.neg(F.mul(t, t))});
      break;
    case GenKind::DZ: {
      FieldElement z = lab.e >= 0 ? F.pow(F.nonsquare(), uint64_t(lab.e))
                                  : F.pow(F.inv(F.nonsquare()), uint64_t(-lab.e));
      s.push_back({G.pos(l), G.pos(l), F.sub(z, F.one())});
      s.push_back({G.pos(-l), G.pos(-l), F.sub(F.inv(z), F.one())});
      break;
    }
    case GenKind::WL: {
      FieldElement m1 = F.from_int(-1);
      s.push_back({G.pos(l), G.pos(l), m1});
      s.push_back({G.pos(-l), G.pos(-l), m1});
      s.push_back({G.pos(l), G.pos(-l), m1});
      s.push_back({G.pos(-l), G.pos(l), m1});
      break;
    }
  }
  return s;
}

Matrix gen_matrix(const GroupId& G, const GenLabel& lab) {
  Matrix m = identity(G.field, G.dim());
  for (const SparseEntry& e : gen_entries(G, lab))
    m.at(e.r, e.c) = G.field.add(m.at(e.r, e.c), e.v);
  return m;
}

GenLabel gen_inverse(const GroupId& G, const GenLabel& lab) {
  validate_label(G, lab);
  GenLabel inv = lab;
  switch (lab.kind) {
    case GenKind::DZ:
      inv.e = -lab.e;
      break;
    case GenKind::WL:
      break;
    default:
      inv.t = G.field.neg(lab.t);
      break;
  }
  return inv;
}

std::vector<GenLabel> enumerate_generators(const GroupId& G) {
  std::vector<GenLabel> out;
  const Field& F = G.field;
  int l = G.rank;
  auto push_powers = [&](GenKind kind, int i, int j) {
    for (uint32_t e = 0; e < F.degree(); ++e) out.push_back(make_root(kind, i, j, F.theta_power(e)));
  };
  if (G.family == Family::A) {
    for (int i = 1; i <= l + 1; ++i)
      for (int j = 1; j <= l + 1; ++j)
        if (i != j) push_powers(GenKind::XPlain, i, j);
    return out;
  }
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (i != j) push_powers(GenKind::XPlain, i, j);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) push_powers(GenKind::XUpper, i, j);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) push_powers(GenKind::XLower, i, j);
  if (G.family == Family::C) {
    for (int i = 1; i <= l; ++i) push_powers(GenKind::XShortU, i, 0);
    for (int i = 1; i <= l; ++i) push_powers(GenKind::XShortL, i, 0);
  }
  if (G.family == Family::B) {
    for (int i = 1; i <= l; ++i) push_powers(GenKind::XB0Up, i, 0);
    for (int i = 1; i <= l; ++i) push_powers(GenKind::XB0Lo, i, 0);
  }
  if (G.family == Family::B || G.family == Family::D) {
    out.push_back(make_dz(1));
    out.push_back(make_wl());
  }
  return out;
}

void apply_left(const GroupId& G, const GenLabel& lab, Matrix& M) {
  // M <- (I + S) M: row r gains v * (old row c) per entry.
  const Field& F = G.field;
  std::vector<SparseEntry> entries = gen_entries(G, lab);
  int d = M.cols;
  std::map<int, std::vector<FieldElement>> sources;
  for (const SparseEntry& e : entries) {
    auto& src = sources[e.c];
    if (src.empty()) {
      src.resize(d);
      for (int j = 0; j < d; ++j) src[j] = M.at(e.c, j);
    }
  }
  for (const SparseEntry& e : entries) {
    const auto& src = sources[e.c];
    for (int j = 0; j < d; ++j) M.at(e.r, j) = F.add(M.at(e.r, j), F.mul(e.v, src[j]));
  }
}

void apply_right(const GroupId& G, Matrix& M, const GenLabel& lab) {
  // M <- M (I + S): column c gains v * (old column r) per entry.
  const Field& F = G.field;
  std::vector<SparseEntry> entries = gen_entries(G, lab);
  int d = M.rows;
  std::map<int, std::vector<FieldElement>> sources;
  for (const SparseEntry& e : entries) {
    auto& src = sources[e.r];
    if (src.empty()) {
      src.resize(d);
      for (int i = 0; i < d; ++i) src[i] = M.at(i, e.r);
    }
  }
  for (const SparseEntry& e : entries) {
    const auto& src = sources[e.r];
    for (int i = 0; i < d; ++i) M.at(i, e.c) = F.add(M.at(i, e.c), F.mul(e.v, src[i]));
  }
}

Matrix word_eval(const GroupId& G, const Word& w) {
  Matrix m = identity(G.field, G.dim());
  for (const GenLabel& lab : w) apply_right(G, m, lab);
  return m;
}

}  // namespace chevmor
