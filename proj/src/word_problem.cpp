#include "chevmor/word_problem.hpp"

#include <algorithm>

namespace chevmor {

Word row_flip_word(const GroupId& G, int i) {
  const Field& F = G.field;
  int l = G.rank;
  if (G.family == Family::A) throw FamilyUnsupported("row_flip_word: family A");
  if (i < 1 || i > l) throw BadIndex("row_flip_word index");
  FieldElement one = F.one();
  FieldElement m1 = F.from_int(-1);
  if (G.family == Family::C) {
    return {make_root(GenKind::XShortU, i, 0, one), make_root(GenKind::XShortL, i, 0, m1),
            make_root(GenKind::XShortU, i, 0, one)};
  }
  // B/D: w_l is a generator; w_t = w_{t+1} sigma_{t+1,t} w_{t,t+1} going down.
  Word w{make_wl()};
  for (int t = l - 1; t >= i; --t) {
    w.push_back(make_root(GenKind::XPlain, t + 1, t, one));
    w.push_back(make_root(GenKind::XPlain, t, t + 1, m1));
    w.push_back(make_root(GenKind::XPlain, t + 1, t, one));
    w.push_back(make_root(GenKind::XUpper, t, t + 1, m1));
    w.push_back(make_root(GenKind::XLower, t, t + 1, m1));
    w.push_back(make_root(GenKind::XUpper, t, t + 1, m1));
  }
  return w;
}

Word torus_word(const GroupId& G, const FieldElement& lambda) {
  const Field& F = G.field;
  int l = G.rank;
  if (G.family == Family::A) throw FamilyUnsupported("torus_word: family A");
  if (F.is_zero(lambda)) throw Error("torus_word: lambda must be nonzero");
  if (lambda == F.one()) return {};
  if (G.family == Family::C) {
    // h_l(lambda) = w_{l,-l}(lambda) w_{l,-l}(-1)
    FieldElement li = F.inv(lambda);
    return {make_root(GenKind::XShortU, l, 0, lambda), make_root(GenKind::XShortL, l, 0, F.neg(li)),
            make_root(GenKind::XShortU, l, 0, lambda), make_root(GenKind::XShortU, l, 0, F.from_int(-1)),
            make_root(GenKind::XShortL, l, 0, F.one()), make_root(GenKind::XShortU, l, 0, F.from_int(-1))};
  }
  // B/D: lambda = t^2; h_{l-1,-l}(t) h_{l-1,l}(t^{-1}) = diag(..,1,t^2 | ..,1,t^{-2})
  std::optional<FieldElement> root = F.sqrt(lambda);
  if (!root) throw NotASquareForFamily("torus_word: lambda is not a square");
  FieldElement t = *root;
  FieldElement ti = F.inv(t);
  Word w;
  auto wflip = [&](const FieldElement& s) {
    // w_{l-1,-l}(s) = x_{l-1,-l}(s) x_{-(l-1),l}(s^{-1}) x_{l-1,-l}(s)
    w.push_back(make_root(GenKind::XUpper, l - 1, l, s));
    w.push_back(make_root(GenKind::XLower, l - 1, l, F.inv(s)));
    w.push_back(make_root(GenKind::XUpper, l - 1, l, s));
  };
  auto sigma = [&](const FieldElement& s) {
    // sigma_{l-1,l}(s) = x_{l-1,l}(s) x_{l,l-1}(-s^{-1}) x_{l-1,l}(s)
    w.push_back(make_root(GenKind::XPlain, l - 1, l, s));
    w.push_back(make_root(GenKind::XPlain, l, l - 1, F.neg(F.inv(s))));
    w.push_back(make_root(GenKind::XPlain, l - 1, l, s));
  };
  FieldElement m1 = F.from_int(-1);
  wflip(t);
  wflip(m1);
  sigma(ti);
  sigma(m1);
  return w;
}

Word sign_word(const GroupId& G) {
  if (G.family != Family::B) throw FamilyUnsupported("sign_word: family B only");
  const Field& F = G.field;
  int l = G.rank;
  return {make_root(GenKind::XB0Up, l, 0, F.one()), make_root(GenKind::XB0Lo, l, 0, F.from_int(-1)),
          make_root(GenKind::XB0Up, l, 0, F.one()), make_wl()};
}

namespace {

// Tracks the working matrix, the generator labels applied on each side, and
// the arithmetic spent.  All mutations of the working matrix go through
// emit_left/emit_right so the recorded word always reassembles the input.
class Decomposer {
 public:
  Decomposer(const GroupId& G, const Matrix& g) : G_(G), F_(G.field), l_(G.rank), d_(G.dim()), cur_(g) {}

  std::pair<Word, OpCounter> run() {
    if (!is_member(G_, cur_)) throw NotMember("decompose input");
    switch (G_.family) {
      case Family::A:
        run_sl();
        break;
      case Family::C:
      case Family::D:
        run_cd();
        break;
      case Family::B:
        run_b();
        break;
    }
    require(is_identity(F_, cur_), "working matrix not reduced to identity");
    Word out;
    out.reserve(left_.size() + right_.size());
    for (const GenLabel& lab : left_) out.push_back(gen_inverse(G_, lab));
    for (auto it = right_.rbegin(); it != right_.rend(); ++it) out.push_back(gen_inverse(G_, *it));
    uint64_t cap = 64ull * uint64_t(l_) * uint64_t(l_);
    require(out.size() <= cap, "word length exceeds 64*l^2 cap");
    ctr_.labels = out.size();
    return {std::move(out), ctr_};
  }

 private:
  enum class Block { A, C };

  void require(bool ok, const char* what) const {
    if (!ok) throw InternalStuck(what);
  }

  void emit_left(const GenLabel& lab) {
    size_t nnz = gen_entries(G_, lab).size();
    ctr_.mults += nnz * uint64_t(d_);
    ctr_.adds += nnz * uint64_t(d_);
    apply_left(G_, lab, cur_);
    left_.push_back(lab);
  }

  void emit_right(const GenLabel& lab) {
    size_t nnz = gen_entries(G_, lab).size();
    ctr_.mults += nnz * uint64_t(d_);
    ctr_.adds += nnz * uint64_t(d_);
    apply_right(G_, cur_, lab);
    right_.push_back(lab);
  }

  // cur <- eval(w) * cur
  void premultiply_word(const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) emit_left(*it);
  }

  // cur <- eval(w)^{-1} * cur
  void premultiply_word_inverse(const Word& w) {
    for (const GenLabel& lab : w) emit_left(gen_inverse(G_, lab));
  }

  FieldElement& entry(int r, int c) { return cur_.at(r, c); }

  // Block coordinates are the 1-based basis indices 1..l.
  FieldElement& blk(Block b, int r, int c) {
    return cur_.at(G_.pos(b == Block::C ? -r : r), G_.pos(c));
  }

  // block row a += t * block row b
  void row_add(Block blk, int a, int b, const FieldElement& t) {
    ctr_.mults += 2;
    if (blk == Block::C) {
      emit_left(make_root(GenKind::XPlain, b, a, F_.neg(t)));
    } else {
      emit_left(make_root(GenKind::XPlain, a, b, t));
    }
  }

  // block column a += t * block column b
  void col_add(Block blk, int a, int b, const FieldElement& t) {
    ctr_.mults += 2;
    (void)blk;
    emit_right(make_root(GenKind::XPlain, b, a, t));
  }

  bool z(const FieldElement& v) const { return F_.is_zero(v); }

  // Transvection-only reduction of an l x l block to diag(p_1..p_m,0..0);
  // returns the rank m.
  int diagonalize(Block b) {
    for (int k = 1; k <= l_; ++k) {
      if (z(blk(b, k, k))) {
        int c = 0;
        for (int cc = k + 1; cc <= l_ && !c; ++cc)
          if (!z(blk(b, k, cc))) c = cc;
        if (c) {
          col_add(b, k, c, F_.one());
        } else {
          int pr = 0, pc = 0;
          for (int r = k + 1; r <= l_ && !pr; ++r)
            for (int cc = k; cc <= l_; ++cc)
              if (!z(blk(b, r, cc))) {
                pr = r;
                pc = cc;
                break;
              }
          if (!pr) return k - 1;
          row_add(b, k, pr, F_.one());
          if (z(blk(b, k, k))) col_add(b, k, pc, F_.one());
        }
      }
      FieldElement pinv = F_.inv(blk(b, k, k));
      ctr_.mults += 1;
      for (int r = k + 1; r <= l_; ++r)
        if (!z(blk(b, r, k))) row_add(b, r, k, F_.neg(F_.mul(blk(b, r, k), pinv)));
      for (int c = k + 1; c <= l_; ++c)
        if (!z(blk(b, k, c))) col_add(b, c, k, F_.neg(F_.mul(blk(b, k, c), pinv)));
    }
    return l_;
  }

  // diag(p_1..p_l) -> diag(1,..,1,lambda) by the pairwise 2x2 trick.
  void normalize_full(Block b) {
    for (int i = 1; i < l_; ++i) {
      FieldElement a = blk(b, i, i);
      if (a == F_.one()) continue;
      FieldElement bb = blk(b, l_, l_);
      FieldElement oma = F_.sub(F_.one(), a);
      row_add(b, i, l_, F_.mul(oma, F_.inv(bb)));
      col_add(b, i, l_, F_.one());
      row_add(b, l_, i, F_.neg(blk(b, l_, l_)));
      col_add(b, l_, i, F_.neg(oma));
    }
  }

  // diag(p_1..p_m,0..) -> diag(1,..,1,0..) using a zero row as scratch.
  void normalize_rank_def(Block b, int m) {
    if (m >= l_) return;
    int zr = m + 1;
    for (int i = 1; i <= m; ++i) {
      FieldElement a = blk(b, i, i);
      if (a == F_.one()) continue;
      row_add(b, zr, i, F_.inv(a));
      row_add(b, i, zr, F_.sub(F_.one(), a));
      row_add(b, zr, i, F_.from_int(-1));
    }
  }

  bool sp() const { return G_.family == Family::C; }

  // tXbX = b forces C*A symmetric (Sp) / skew (O) once C is diagonal.
  void assert_block_pairing(Block cb, Block ab, const char* what) {
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) {
        ctr_.mults += 2;
        FieldElement lhs = F_.mul(blk(cb, i, i), blk(ab, i, j));
        FieldElement rhs = F_.mul(blk(cb, j, j), blk(ab, j, i));
        require(lhs == (sp() ? rhs : F_.neg(rhs)), what);
      }
  }

  // ---- families C and D --------------------------------------------------

  void run_cd() {
    int m = diagonalize(Block::C);
    if (m == l_) {
      normalize_full(Block::C);
      assert_block_pairing(Block::C, Block::A, "corollary-A shape after step 1");
      clear_a_full();
      for (int i = 1; i <= l_; ++i) premultiply_word(row_flip_word(G_, i));
    } else {
      normalize_rank_def(Block::C, m);
      assert_rank_def_shape(m);
      clear_a_rank_def(m);
      for (int i = 1; i <= m; ++i) premultiply_word(row_flip_word(G_, i));
    }
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) require(z(blk(Block::C, i, j)), "C block nonzero after row flips");
    finish_block_triangular();
  }

  // CG2 from the left: A <- A + R*C with R = -A*C^{-1} split into elementary
  // symmetric (Sp) / skew (O) pieces.
  void clear_a_full() {
    FieldElement dlinv = F_.inv(blk(Block::C, l_, l_));
    ctr_.mults += 1;
    auto s_entry = [&](int i, int j) {
      ctr_.mults += 1;
      return j == l_ ? F_.mul(blk(Block::A, i, j), dlinv) : blk(Block::A, i, j);
    };
    for (int i = 1; i <= l_; ++i) {
      for (int j = i; j <= l_; ++j) {
        if (i == j) {
          FieldElement t = F_.neg(s_entry(i, i));
          if (sp()) {
            if (!z(t)) emit_left(make_root(GenKind::XShortU, i, 0, t));
          } else {
            require(z(t), "lemma-C: skew block has nonzero diagonal");
          }
        } else {
          FieldElement t = F_.neg(s_entry(i, j));
          if (!z(t)) emit_left(make_root(GenKind::XUpper, i, j, t));
        }
      }
    }
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) require(z(blk(Block::A, i, j)), "A block not cleared (lemma C)");
  }

  void assert_rank_def_shape(int m) {
    // corollary A (rank-deficient): A12 = 0 and A11 symmetric/skew
    for (int i = 1; i <= m; ++i)
      for (int j = m + 1; j <= l_; ++j) require(z(blk(Block::A, i, j)), "corollary-A: A12 not zero");
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j) {
        FieldElement a = blk(Block::A, i, j);
        FieldElement bb = blk(Block::A, j, i);
        require(a == (sp() ? bb : F_.neg(bb)), "corollary-A: A11 pairing");
      }
  }

  void clear_a_rank_def(int m) {
    for (int i = 1; i <= l_; ++i) {
      for (int j = std::max(i, 1); j <= l_; ++j) {
        if (i > m && j > m) continue;
        if (j < i) continue;
        FieldElement t;
        if (i == j) {
          if (!sp()) continue;  // skew diagonal is zero already
          t = F_.neg(blk(Block::A, i, i));
          if (!z(t)) emit_left(make_root(GenKind::XShortU, i, 0, t));
          continue;
        }
        if (j <= m) {
          t = F_.neg(blk(Block::A, i, j));
        } else {
          t = sp() ? F_.neg(blk(Block::A, j, i)) : blk(Block::A, j, i);
        }
        if (!z(t)) emit_left(make_root(GenKind::XUpper, i, j, t));
      }
    }
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= std::min(m, l_); ++j) require(z(blk(Block::A, i, j)), "rank-def clear: A column");
    for (int i = 1; i <= std::min(m, l_); ++i)
      for (int j = 1; j <= l_; ++j) require(z(blk(Block::A, i, j)), "rank-def clear: A row");
  }

  // cur = [[A,B],[0,D]] (with clean 0 row/column for family B): make A the
  // identity-with-lambda, check lemma B, clear B, finish with the torus.
  void finish_block_triangular() {
    int mA = diagonalize(Block::A);
    require(mA == l_, "lemma B/I: A block singular");
    normalize_full(Block::A);
    FieldElement lambda = blk(Block::A, l_, l_);
    for (int i = 1; i < l_; ++i) require(blk(Block::A, i, i) == F_.one(), "A normalization");
    // lemma B: lower-right block is the transposed inverse
    FieldElement lami = F_.inv(lambda);
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) {
        FieldElement want = i == j ? (i == l_ ? lami : F_.one()) : F_.zero();
        require(cur_.at(G_.pos(-i), G_.pos(-j)) == want, "lemma B: D != tA^{-1}");
      }
    clear_b_block(lambda);
    torus_stage(lambda);
  }

  FieldElement b_entry(int i, int j) { return cur_.at(G_.pos(i), G_.pos(-j)); }

  // CG2 from the right: B <- B + A*R with R = -A^{-1}B (corollary B shapes).
  void clear_b_block(const FieldElement& lambda) {
    FieldElement lami = F_.inv(lambda);
    auto s_entry = [&](int i, int j) {
      ctr_.mults += 1;
      return i == l_ ? F_.mul(lami, b_entry(i, j)) : b_entry(i, j);
    };
    for (int i = 1; i <= l_; ++i)
      for (int j = i; j <= l_; ++j) {
        if (i == j) {
          FieldElement t = F_.neg(s_entry(i, i));
          if (sp()) {
            if (!z(t)) emit_right(make_root(GenKind::XShortU, i, 0, t));
          } else {
            require(z(t), "corollary-B: skew block has nonzero diagonal");
          }
          continue;
        }
        FieldElement sij = s_entry(i, j);
        FieldElement sji = s_entry(j, i);
        require(sij == (sp() ? sji : F_.neg(sji)), "corollary-B pairing");
        if (!z(sij)) emit_right(make_root(GenKind::XUpper, i, j, F_.neg(sij)));
      }
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) require(z(b_entry(i, j)), "B block not cleared");
  }

  void torus_stage(const FieldElement& lambda) {
    if (lambda == F_.one()) return;
    Word w;
    if (G_.family == Family::C || F_.is_square(lambda)) {
      w = torus_word(G_, lambda);
    } else {
      ctr_.mults += 1;
      w = torus_word(G_, F_.mul(lambda, F_.inv(F_.nonsquare())));
      w.insert(w.begin(), make_dz(1));
    }
    premultiply_word_inverse(w);
  }

  // ---- family A -----------------------------------------------------------

  void run_sl() {
    auto e = [&](int r, int c) -> FieldElement& { return cur_.at(r - 1, c - 1); };
    for (int c = 1; c < d_; ++c) {
      if (z(e(c, c))) {
        int r = 0;
        for (int rr = c + 1; rr <= d_ && !r; ++rr)
          if (!z(e(rr, c))) r = rr;
        require(r != 0, "SL pivot search");
        emit_left(make_root(GenKind::XPlain, c, r, F_.one()));
        ctr_.mults += 1;
      }
      if (!(e(c, c) == F_.one())) {
        int r = 0;
        for (int rr = c + 1; rr <= d_ && !r; ++rr)
          if (!z(e(rr, c))) r = rr;
        if (!r) {
          emit_left(make_root(GenKind::XPlain, c + 1, c, F_.one()));
          r = c + 1;
        }
        FieldElement t = F_.mul(F_.sub(F_.one(), e(c, c)), F_.inv(e(r, c)));
        ctr_.mults += 2;
        emit_left(make_root(GenKind::XPlain, c, r, t));
      }
      for (int r = 1; r <= d_; ++r) {
        if (r == c || z(e(r, c))) continue;
        ctr_.mults += 1;
        emit_left(make_root(GenKind::XPlain, r, c, F_.neg(e(r, c))));
      }
      for (int j = c + 1; j <= d_; ++j) {
        if (z(e(c, j))) continue;
        ctr_.mults += 1;
        emit_right(make_root(GenKind::XPlain, c, j, F_.neg(e(c, j))));
      }
    }
  }

  // ---- family B -----------------------------------------------------------

  FieldElement& alpha() { return cur_.at(0, 0); }
  FieldElement& xrow(int i) { return cur_.at(0, G_.pos(i)); }
  FieldElement& yrow(int i) { return cur_.at(0, G_.pos(-i)); }
  FieldElement& ecol(int i) { return cur_.at(G_.pos(i), 0); }
  FieldElement& fcol(int i) { return cur_.at(G_.pos(-i), 0); }

  void run_b() {
    int m = diagonalize(Block::C);
    if (m == l_)
      normalize_full(Block::C);
    else
      normalize_rank_def(Block::C, m);
    // step 2: CG4 clears X_i and F_i wherever C has a pivot
    FieldElement two_inv = F_.inv(F_.from_uint(2));
    for (int i = 1; i <= m; ++i) {
      FieldElement di = blk(Block::C, i, i);
      FieldElement dinv = F_.inv(di);
      ctr_.mults += 1;
      if (!z(xrow(i))) {
        ctr_.mults += 1;
        emit_left(make_root(GenKind::XB0Up, i, 0, F_.mul(xrow(i), dinv)));
      }
      if (!z(fcol(i))) {
        ctr_.mults += 2;
        emit_right(make_root(GenKind::XB0Up, i, 0, F_.neg(F_.mul(fcol(i), F_.mul(two_inv, dinv)))));
      }
      require(z(xrow(i)) && z(fcol(i)), "step 2: X/F entry survived");
    }
    // step 3: lemma F shape, then CG2 clears A (skew pieces)
    if (m == l_) {
      assert_block_pairing(Block::C, Block::A, "lemma-F shape after step 2");
      clear_a_full();
      for (int i = 1; i <= l_; ++i) premultiply_word(row_flip_word(G_, i));
    } else {
      assert_rank_def_shape(m);
      clear_a_rank_def(m);
      for (int i = 1; i <= m; ++i) premultiply_word(row_flip_word(G_, i));
    }
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) require(z(blk(Block::C, i, j)), "C block nonzero after row flips");
    // lemma I: X vanished entirely
    for (int i = 1; i <= l_; ++i) require(z(xrow(i)), "lemma I: X not zero");
    int mA = diagonalize(Block::A);
    require(mA == l_, "lemma I: A block singular");
    normalize_full(Block::A);
    // remaining E entries die against the diagonal A via CG4
    for (int i = 1; i <= l_; ++i) {
      if (z(ecol(i))) continue;
      ctr_.mults += 2;
      emit_right(make_root(GenKind::XB0Up, i, 0, F_.neg(F_.mul(ecol(i), F_.mul(two_inv, F_.inv(blk(Block::A, i, i)))))));
    }
    // lemma G: alpha = +-1 and the remaining bands vanish
    require(alpha() == F_.one() || alpha() == F_.from_int(-1), "lemma G: alpha^2 != 1");
    for (int i = 1; i <= l_; ++i)
      require(z(ecol(i)) && z(fcol(i)) && z(xrow(i)) && z(yrow(i)), "lemma G: side bands not zero");
    FieldElement lambda = blk(Block::A, l_, l_);
    FieldElement lami = F_.inv(lambda);
    for (int i = 1; i <= l_; ++i)
      for (int j = 1; j <= l_; ++j) {
        FieldElement want = i == j ? (i == l_ ? lami : F_.one()) : F_.zero();
        require(cur_.at(G_.pos(-i), G_.pos(-j)) == want, "lemma G: D != A^{-1}");
      }
    clear_b_block(lambda);
    if (alpha() == F_.from_int(-1)) premultiply_word_inverse(sign_word(G_));
    torus_stage(lambda);
  }

  GroupId G_;
  const Field& F_;
  int l_;
  int d_;
  Matrix cur_;
  std::vector<GenLabel> left_;
  std::vector<GenLabel> right_;
  OpCounter ctr_;
};

}  // namespace

std::pair<Word, OpCounter> decompose(const GroupId& G, const Matrix& g) {
  if (g.rows != G.dim() || g.cols != G.dim()) throw DimMismatch("decompose");
  Decomposer dec(G, g);
  return dec.run();
}

}  // namespace chevmor
