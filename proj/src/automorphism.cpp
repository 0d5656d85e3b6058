#include "chevmor/automorphism.hpp"

#include <map>
#include <tuple>

namespace chevmor {

namespace {

using ShapeKey = std::tuple<int, int, int>;  // kind, i, j

ShapeKey shape_key(const GenLabel& lab) { return {int(lab.kind), lab.i, lab.j}; }

// Word-to-matrix substitution against a fixed image list.  Caches small
// matrix powers of the images so repeated parameters stay cheap.
class Substituter {
 public:
  explicit Substituter(const AutoRep& rep) : rep_(rep), F_(rep.group.field) {
    const auto labels = enumerate_generators(rep_.group);
    for (size_t idx = 0; idx < labels.size(); ++idx) {
      const GenLabel& lab = labels[idx];
      if (lab.kind == GenKind::DZ) {
        dz_ = int(idx);
      } else if (lab.kind == GenKind::WL) {
        wl_ = int(idx);
      } else {
        // power-basis labels are consecutive; remember the theta^0 slot
        auto [it, fresh] = base_.emplace(shape_key(lab), int(idx));
        (void)it;
        (void)fresh;
      }
    }
    powers_.resize(rep_.images.size());
  }

  Matrix apply_word(const Word& w) {
    Matrix acc = identity(F_, rep_.group.dim());
    for (const GenLabel& lab : w) mul_image(acc, lab);
    return acc;
  }

 private:
  const Matrix& power(int idx, uint32_t c) {
    auto& cache = powers_[idx];
    if (cache.empty()) cache.push_back(rep_.images[idx]);
    while (cache.size() < c) cache.push_back(matmul(F_, cache.back(), rep_.images[idx]));
    return cache[c - 1];
  }

  void mul_image(Matrix& acc, const GenLabel& lab) {
    switch (lab.kind) {
      case GenKind::DZ: {
        if (lab.e == 0) return;
        Matrix base = lab.e > 0 ? rep_.images[dz_] : matinv(F_, rep_.images[dz_]);
        acc = matmul(F_, acc, matpow(F_, base, uint64_t(lab.e > 0 ? lab.e : -lab.e)));
        return;
      }
      case GenKind::WL:
        acc = matmul(F_, acc, rep_.images[wl_]);
        return;
      default: {
        // x_r(t) = prod_j x_r(theta^j)^{c_j} for t = sum c_j theta^j
        auto it = base_.find(shape_key(lab));
        if (it == base_.end()) throw Inconsistent("substituter: unknown root shape");
        for (uint32_t j = 0; j < F_.degree(); ++j) {
          uint32_t c = lab.t.c[j];
          if (c) acc = matmul(F_, acc, power(it->second + int(j), c));
        }
        return;
      }
    }
  }

  const AutoRep& rep_;
  const Field& F_;
  std::map<ShapeKey, int> base_;
  int dz_ = -1;
  int wl_ = -1;
  std::vector<std::vector<Matrix>> powers_;
};

}  // namespace

int canonical_index(const GroupId& G, GenKind kind, int i, int j, uint32_t power) {
  const auto labels = enumerate_generators(G);
  for (size_t idx = 0; idx < labels.size(); ++idx) {
    const GenLabel& lab = labels[idx];
    if (lab.kind != kind || lab.i != i || lab.j != j) continue;
    if (kind == GenKind::DZ || kind == GenKind::WL) return int(idx);
    if (lab.t == G.field.theta_power(power)) return int(idx);
  }
  return -1;
}

AutoRep identity_automorphism(const GroupId& G) {
  AutoRep rep{G, {}};
  for (const GenLabel& lab : enumerate_generators(G)) rep.images.push_back(gen_matrix(G, lab));
  return rep;
}

AutoRep auto_from_conjugation(const GroupId& G, const Matrix& c) {
  const Field& F = G.field;
  if (c.rows != G.dim() || c.cols != G.dim()) throw DimMismatch("auto_from_conjugation");
  if (G.family == Family::A) {
    if (F.is_zero(det(F, c))) throw NotNormalizing("conjugator is singular");
  } else {
    try {
      similitude_factor(G, c);
    } catch (const NotSimilitude&) {
      throw NotNormalizing("conjugator is not a similitude");
    }
  }
  Matrix cinv = matinv(F, c);
  AutoRep rep{G, {}};
  for (const GenLabel& lab : enumerate_generators(G)) {
    Matrix img = matmul(F, c, matmul(F, gen_matrix(G, lab), cinv));
    if (!is_member(G, img)) throw NotNormalizing("conjugated generator leaves the group");
    rep.images.push_back(std::move(img));
  }
  return rep;
}

Matrix auto_apply(const AutoRep& phi, const Matrix& h) {
  Substituter sub(phi);
  auto [word, ctr] = decompose(phi.group, h);
  (void)ctr;
  return sub.apply_word(word);
}

AutoRep auto_compose(const AutoRep& phi, const AutoRep& psi) {
  if (!(phi.group == psi.group)) throw GroupMismatch("auto_compose");
  Substituter sub(phi);
  AutoRep out{phi.group, {}};
  out.images.reserve(psi.images.size());
  for (const Matrix& img : psi.images) {
    auto [word, ctr] = decompose(psi.group, img);
    (void)ctr;
    out.images.push_back(sub.apply_word(word));
  }
  return out;
}

AutoRep auto_pow(const AutoRep& phi, uint64_t n) {
  if (n == 0) return identity_automorphism(phi.group);
  int top = 63;
  while (!((n >> top) & 1)) --top;
  AutoRep acc = phi;
  for (int b = top - 1; b >= 0; --b) {
    acc = auto_compose(acc, acc);
    if ((n >> b) & 1) acc = auto_compose(acc, phi);
  }
  return acc;
}

bool same_images(const AutoRep& a, const AutoRep& b) {
  return a.group == b.group && a.images == b.images;
}

}  // namespace chevmor
