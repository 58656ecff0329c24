#include "hopfforge/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hopfforge {

namespace {

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<uint8_t> word_of_index(uint32_t theta, uint32_t n, uint64_t idx) {
  std::vector<uint8_t> w(n);
  for (uint32_t p = n; p-- > 0;) {
    w[p] = static_cast<uint8_t>(idx % theta);
    idx /= theta;
  }
  return w;
}

uint32_t inversion_count(const std::vector<uint32_t>& perm) {
  uint32_t inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

// plain position swaps, scalar-free; used to confirm a word realizes a
// permutation before any braiding scalar is trusted
std::vector<uint32_t> permutation_of_word(uint32_t n, const std::vector<uint32_t>& gens) {
  std::vector<uint32_t> arr(n);
  std::iota(arr.begin(), arr.end(), 0u);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    std::swap(arr[*it - 1], arr[*it]);
  return arr;
}

}  // namespace

DiagonalBraiding braiding_of(const PointedDatum& datum) {
  DiagonalBraiding B;
  B.theta = datum.theta;
  B.conductor = datum.conductor;
  B.qexp.assign(size_t(datum.theta) * datum.theta, 0);
  for (uint32_t i = 0; i < datum.theta; ++i)
    for (uint32_t j = 0; j < datum.theta; ++j)
      B.qexp[i * datum.theta + j] =
          character_pairing_exponent(datum.group, datum.chi[j], datum.g[i], datum.conductor);
  return B;
}

void apply_braid_generator(const DiagonalBraiding& B, uint32_t k, BraidedWord& w) {
  if (k == 0 || k >= w.letters.size()) throw input_error("braid generator out of range");
  uint8_t left = w.letters[k - 1];
  uint8_t right = w.letters[k];
  w.zexp = (w.zexp + B.exponent(left, right)) % B.conductor;
  w.letters[k - 1] = right;
  w.letters[k] = left;
}

BraidedWord apply_braid_word(const DiagonalBraiding& B, const std::vector<uint32_t>& gens,
                             std::vector<uint8_t> letters) {
  BraidedWord w{std::move(letters), 0};
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) apply_braid_generator(B, *it, w);
  return w;
}

std::vector<uint32_t> reduced_word(std::vector<uint32_t> perm) {
  std::vector<uint32_t> gens;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t p = 0; p + 1 < perm.size(); ++p) {
      if (perm[p] > perm[p + 1]) {
        std::swap(perm[p], perm[p + 1]);
        gens.push_back(static_cast<uint32_t>(p + 1));
        moved = true;
        break;
      }
    }
  }
  return gens;
}

std::vector<uint32_t> reduced_word_descending(std::vector<uint32_t> perm) {
  std::vector<uint32_t> gens;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t p = perm.size() - 1; p-- > 0;) {
      if (perm[p] > perm[p + 1]) {
        std::swap(perm[p], perm[p + 1]);
        gens.push_back(static_cast<uint32_t>(p + 1));
        moved = true;
        break;
      }
    }
  }
  return gens;
}

uint64_t word_index(const DiagonalBraiding& B, const std::vector<uint8_t>& letters) {
  uint64_t idx = 0;
  for (uint8_t c : letters) idx = idx * B.theta + c;
  return idx;
}

bool matsumoto_recheck(const DiagonalBraiding& B, uint32_t n, uint32_t samples,
                       uint64_t seed, std::string* witness) {
  if (n < 2) return true;
  uint64_t dim = pow_u64(B.theta, n);
  if (dim > 10000) throw cap_error("basis of V^n too large for a Matsumoto recheck");

  std::mt19937_64 rng(seed);
  std::vector<uint32_t> perm(n);
  for (uint32_t s = 0; s < samples; ++s) {
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);

    auto w1 = reduced_word(perm);
    auto w2 = reduced_word_descending(perm);
    uint32_t inv = inversion_count(perm);
    if (w1.size() != inv || w2.size() != inv ||
        permutation_of_word(n, w1) != perm || permutation_of_word(n, w2) != perm) {
      if (witness) *witness = "reduced word construction failed on a sampled permutation";
      return false;
    }

    for (uint64_t idx = 0; idx < dim; ++idx) {
      auto base = word_of_index(B.theta, n, idx);
      BraidedWord r1 = apply_braid_word(B, w1, base);
      BraidedWord r2 = apply_braid_word(B, w2, base);
      if (r1.letters != r2.letters || r1.zexp != r2.zexp) {
        if (witness) {
          std::ostringstream os;
          os << "T_w differs between reduced words at sample " << s << ", basis word " << idx;
          *witness = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

CycMatrix quantum_symmetrizer(const DiagonalBraiding& B, uint32_t n, uint64_t word_cap) {
  uint64_t dim = pow_u64(B.theta, n);
  if (dim > word_cap) throw cap_error("tensor power basis exceeds the word cap");
  Eigen::Index d = static_cast<Eigen::Index>(dim);

  CycMatrix M = CycMatrix::Constant(d, d, Cyc(0));
  for (Eigen::Index i = 0; i < d; ++i) M(i, i) = Cyc(1);

  // S_s = S_{s-1} (1 + c_{s-1} + c_{s-1}c_{s-2} + ... + c_{s-1}...c_1);
  // right factor is a sum of s monomial operators, so each column of the
  // product is a short combination of old columns
  for (uint32_t s = 2; s <= n; ++s) {
    CycMatrix next = CycMatrix::Constant(d, d, Cyc(0));
    std::vector<uint32_t> term;  // c_{s-1} c_{s-2} ... c_{s-t}
    for (uint64_t col = 0; col < dim; ++col) {
      auto base = word_of_index(B.theta, n, col);
      Eigen::Index c = static_cast<Eigen::Index>(col);
      for (Eigen::Index r = 0; r < d; ++r) next(r, c) = M(r, c);  // identity term
      term.clear();
      for (uint32_t t = 1; t < s; ++t) {
        term.push_back(s - t);
        BraidedWord im = apply_braid_word(B, term, base);
        Cyc scale = Cyc::root_power(B.conductor, im.zexp);
        Eigen::Index src = static_cast<Eigen::Index>(word_index(B, im.letters));
        for (Eigen::Index r = 0; r < d; ++r) {
          if (!M(r, src).is_zero()) next(r, c) = next(r, c) + scale * M(r, src);
        }
      }
    }
    M = std::move(next);
  }
  return M;
}

CycMatrix quantum_symmetrizer_direct(const DiagonalBraiding& B, uint32_t n,
                                     uint64_t word_cap) {
  uint64_t dim = pow_u64(B.theta, n);
  if (dim > word_cap) throw cap_error("tensor power basis exceeds the word cap");
  Eigen::Index d = static_cast<Eigen::Index>(dim);

  CycMatrix M = CycMatrix::Constant(d, d, Cyc(0));
  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<uint64_t>> hits(dim);   // per column: image index
  std::vector<std::vector<uint32_t>> zexps(dim);  // per column: root exponent
  do {
    auto gens = reduced_word(perm);
    for (uint64_t col = 0; col < dim; ++col) {
      BraidedWord im = apply_braid_word(B, gens, word_of_index(B.theta, n, col));
      hits[col].push_back(word_index(B, im.letters));
      zexps[col].push_back(im.zexp);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (uint64_t col = 0; col < dim; ++col) {
    Eigen::Index c = static_cast<Eigen::Index>(col);
    for (size_t t = 0; t < hits[col].size(); ++t) {
      Eigen::Index r = static_cast<Eigen::Index>(hits[col][t]);
      M(r, c) = M(r, c) + Cyc::root_power(B.conductor, zexps[col][t]);
    }
  }
  return M;
}

uint32_t exact_rank(CycMatrix M) {
  Eigen::Index rows = M.rows(), cols = M.cols();
  uint32_t rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < uint32_t(rows); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (!M(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != Eigen::Index(rank)) M.row(pivot).swap(M.row(rank));
    Cyc inv = M(rank, c).inverse();
    for (Eigen::Index k = c; k < cols; ++k) M(rank, k) = M(rank, k) * inv;
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (M(r, c).is_zero()) continue;
      Cyc f = M(r, c);
      for (Eigen::Index k = c; k < cols; ++k) M(r, k) = M(r, k) - f * M(rank, k);
    }
    ++rank;
  }
  return rank;
}

HilbertReport nichols_hilbert_series(const PointedDatum& datum, uint64_t word_cap) {
  PointedDatum local = datum;
  local.refresh_orders();
  DiagonalBraiding B = braiding_of(local);

  HilbertReport rep;
  std::vector<uint64_t> poly{1};
  uint32_t top = 0;
  for (uint32_t i = 0; i < local.theta; ++i) {
    uint32_t Ni = local.N[i];
    if (Ni < 2) throw input_error("diagonal braiding entry of order < 2");
    top += Ni - 1;
    std::vector<uint64_t> next(poly.size() + Ni - 1, 0);
    for (size_t a = 0; a < poly.size(); ++a)
      for (uint32_t b = 0; b < Ni; ++b) next[a + b] += poly[a];
    poly = std::move(next);
  }

  for (uint32_t deg = 0; deg <= top + 1; ++deg) {
    rep.expected.push_back(deg < poly.size() ? static_cast<uint32_t>(poly[deg]) : 0u);
    rep.ranks.push_back(exact_rank(quantum_symmetrizer(B, deg, word_cap)));
  }

  rep.match = rep.ranks == rep.expected;
  if (!rep.match) {
    for (size_t deg = 0; deg < rep.ranks.size(); ++deg) {
      if (rep.ranks[deg] != rep.expected[deg]) {
        std::ostringstream os;
        os << "degree " << deg << ": symmetrizer rank " << rep.ranks[deg]
           << ", series coefficient " << rep.expected[deg];
        rep.witness = os.str();
        break;
      }
    }
  }
  return rep;
}

}  // namespace hopfforge
