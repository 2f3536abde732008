#include "oscalg/fock.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace oscalg {

SurfaceDatum::SurfaceDatum(std::vector<int> degrees, std::vector<std::vector<Rat>> pairing)
    : degree_(std::move(degrees)), pairing_(std::move(pairing)) {
  auto K = degree_.size();
  if (K == 0) throw contract_error("datum needs at least one class");
  if (pairing_.size() != K) throw contract_error("pairing matrix size mismatch");
  for (auto& row : pairing_)
    if (row.size() != K) throw contract_error("pairing matrix must be square");
  for (int d : degree_)
    if (d < 0 || d > 4) throw contract_error("class degrees must lie in 0..4");
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b) {
      if (degree_[a] + degree_[b] != 4 && pairing_[a][b] != 0)
        throw contract_error("pairing must vanish unless degrees sum to 4");
      bool flip = (degree_[a] * degree_[b]) % 2 != 0;
      Rat mirror = flip ? Rat(-pairing_[b][a]) : pairing_[b][a];
      if (pairing_[a][b] != mirror)
        throw contract_error("pairing must be graded-symmetric");
    }
}

SurfaceBetti SurfaceDatum::betti() const {
  std::array<long, 5> b{};
  for (int d : degree_) ++b[static_cast<std::size_t>(d)];
  return {b[0], b[1], b[2], b[3], b[4]};
}

std::optional<std::vector<std::vector<long long>>> SurfaceDatum::integral_pairing() const {
  std::size_t K = degree_.size();
  std::vector<std::vector<long long>> out(K, std::vector<long long>(K, 0));
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b) {
      const Rat& p = pairing_[a][b];
      if (!rat_is_integer(p)) return std::nullopt;
      if (!p.get_num().fits_slong_p()) return std::nullopt;
      out[a][b] = p.get_num().get_si();
    }
  return out;
}

SurfaceDatum datum_p2() {
  std::vector<int> deg{0, 2, 4};
  std::vector<std::vector<Rat>> P(3, std::vector<Rat>(3, Rat(0)));
  P[0][2] = P[2][0] = 1;  // point against fundamental class
  P[1][1] = 1;            // hyperplane squared
  return SurfaceDatum(deg, P);
}

SurfaceDatum datum_k3() {
  // Middle intersection form: three hyperbolic planes plus two copies of the
  // negated E8 form (a T(2,3,5) tree with squares 2 and edges -1).
  std::vector<int> deg(24, 2);
  deg[0] = 0;
  deg[23] = 4;
  std::vector<std::vector<Rat>> P(24, std::vector<Rat>(24, Rat(0)));
  P[0][23] = P[23][0] = 1;
  int at = 1;
  for (int u = 0; u < 3; ++u) {
    P[at][at + 1] = P[at + 1][at] = 1;
    at += 2;
  }
  static const int e8_edges[7][2] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (int copy = 0; copy < 2; ++copy) {
    for (int i = 0; i < 8; ++i) P[at + i][at + i] = -2;
    for (auto& e : e8_edges) {
      P[at + e[0]][at + e[1]] = 1;
      P[at + e[1]][at + e[0]] = 1;
    }
    at += 8;
  }
  return SurfaceDatum(deg, P);
}

SurfaceDatum datum_abelian() {
  // Exterior algebra on four odd generators e1..e4. Classes, in order:
  // 1; e1..e4; e12,e13,e14,e23,e24,e34; e234,e134,e124,e123; e1234.
  std::vector<int> deg{0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4};
  std::vector<std::vector<Rat>> P(16, std::vector<Rat>(16, Rat(0)));
  P[0][15] = P[15][0] = 1;
  // e_i wedge (complementary triple): signs of the shuffle.
  const int dsign[4] = {1, -1, 1, -1};
  for (int i = 0; i < 4; ++i) {
    P[1 + i][11 + i] = dsign[i];
    P[11 + i][1 + i] = -dsign[i];
  }
  // Degree-two complements: e12*e34, e13*e24, e14*e23.
  P[5][10] = P[10][5] = 1;
  P[6][9] = P[9][6] = -1;
  P[7][8] = P[8][7] = 1;
  return SurfaceDatum(deg, P);
}

SurfaceDatum datum_from_betti(const SurfaceBetti& b) {
  std::vector<int> deg;
  for (long i = 0; i < b.b0; ++i) deg.push_back(0);
  for (long i = 0; i < b.b1; ++i) deg.push_back(1);
  for (long i = 0; i < b.b2; ++i) deg.push_back(2);
  for (long i = 0; i < b.b3; ++i) deg.push_back(3);
  for (long i = 0; i < b.b4; ++i) deg.push_back(4);
  auto K = deg.size();
  std::vector<std::vector<Rat>> P(K, std::vector<Rat>(K, Rat(0)));
  auto first_of = [&](int d) {
    std::size_t i = 0;
    while (deg[i] != d) ++i;
    return i;
  };
  for (long i = 0; i < b.b0; ++i) {
    std::size_t a = first_of(0) + static_cast<std::size_t>(i);
    std::size_t c = first_of(4) + static_cast<std::size_t>(i);
    P[a][c] = P[c][a] = 1;
  }
  for (long i = 0; i < b.b1; ++i) {
    std::size_t a = first_of(1) + static_cast<std::size_t>(i);
    std::size_t c = first_of(3) + static_cast<std::size_t>(i);
    P[a][c] = 1;
    P[c][a] = -1;
  }
  for (long i = 0; i < b.b2; ++i) {
    std::size_t a = first_of(2) + static_cast<std::size_t>(i);
    P[a][a] = 1;
  }
  return SurfaceDatum(deg, P);
}

FockState::FockState(std::vector<FockLabel> sorted_labels, const SurfaceDatum& S)
    : labels_(std::move(sorted_labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const FockLabel& l = labels_[i];
    if (l.level < 1) throw contract_error("mode level must be >= 1");
    if (l.cls < 0 || l.cls >= S.class_count()) throw contract_error("class index out of range");
    if (i > 0) {
      if (labels_[i - 1] > l) throw contract_error("labels must be sorted");
      if (labels_[i - 1] == l && S.odd(l.cls)) throw contract_error("repeated odd mode");
    }
  }
}

long FockState::energy() const {
  long e = 0;
  for (const FockLabel& l : labels_) e += l.level;
  return e;
}

long FockState::t_shift(const SurfaceDatum& S) const {
  long t = 0;
  for (const FockLabel& l : labels_) t += S.degree(l.cls) - 2;
  return t;
}

std::string FockState::text() const {
  if (labels_.empty()) return "|0>";
  std::string out;
  for (const FockLabel& l : labels_)
    out += "p(-" + std::to_string(l.level) + ",c" + std::to_string(l.cls) + ") ";
  return out + "|0>";
}

FockVector vacuum() {
  FockVector v;
  v.emplace(FockState(), Rat(1));
  return v;
}

void fock_add(FockVector& v, const FockState& s, const Rat& c) {
  if (c == 0) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

std::string fock_text(const FockVector& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : v) {
    if (!first) out += " + ";
    first = false;
    out += "(" + rat_text(c) + ")*" + s.text();
  }
  return out;
}

bool fock_equal(const FockVector& a, const FockVector& b) {
  for (const auto& [s, c] : a) {
    auto it = b.find(s);
    if (c == 0) continue;
    if (it == b.end() || it->second != c) return false;
  }
  for (const auto& [s, c] : b)
    if (c != 0 && a.find(s) == a.end()) return false;
  return true;
}

FockVector fock_scaled(const FockVector& v, const Rat& s) {
  FockVector out;
  if (s == 0) return out;
  for (const auto& [st, c] : v) out.emplace(st, Rat(c * s));
  return out;
}

FockVector fock_sum(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [st, c] : b) fock_add(out, st, c);
  return out;
}

FockVector create(long i, int alpha, const FockVector& v, const SurfaceDatum& S) {
  if (i < 1) throw contract_error("creation level must be >= 1");
  if (alpha < 0 || alpha >= S.class_count()) throw contract_error("class index out of range");
  FockVector out;
  FockLabel nl{i, alpha};
  bool nodd = S.odd(alpha);
  for (const auto& [st, c] : v) {
    const auto& L = st.labels();
    std::size_t pos = 0;
    long crossings = 0;
    while (pos < L.size() && L[pos] < nl) {
      if (S.odd(L[pos].cls)) ++crossings;
      ++pos;
    }
    if (nodd && pos < L.size() && L[pos] == nl) continue;  // odd square is zero
    std::vector<FockLabel> nw;
    nw.reserve(L.size() + 1);
    nw.insert(nw.end(), L.begin(), L.begin() + static_cast<long>(pos));
    nw.push_back(nl);
    nw.insert(nw.end(), L.begin() + static_cast<long>(pos), L.end());
    Rat coef = (nodd && crossings % 2 != 0) ? Rat(-c) : c;
    fock_add(out, FockState(std::move(nw), S), coef);
  }
  return out;
}

FockVector annihilate(long i, int alpha, const FockVector& v, const SurfaceDatum& S) {
  if (i < 1) throw contract_error("annihilation level must be >= 1");
  if (alpha < 0 || alpha >= S.class_count()) throw contract_error("class index out of range");
  FockVector out;
  bool aodd = S.odd(alpha);
  for (const auto& [st, c] : v) {
    const auto& L = st.labels();
    int sign = 1;
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (L[j].level == i) {
        const Rat& pr = S.pairing(alpha, L[j].cls);
        if (pr != 0) {
          std::vector<FockLabel> nw;
          nw.reserve(L.size() - 1);
          for (std::size_t k = 0; k < L.size(); ++k)
            if (k != j) nw.push_back(L[k]);
          Rat coef = c * pr * Rat(i);
          if (sign < 0) coef = -coef;
          fock_add(out, FockState(std::move(nw), S), coef);
        }
      }
      if (aodd && S.odd(L[j].cls)) sign = -sign;
    }
  }
  return out;
}

FockVector apply_generator(long signed_level, int alpha, const FockVector& v,
                           const SurfaceDatum& S) {
  if (signed_level == 0) throw contract_error("generator level must be nonzero");
  return signed_level > 0 ? annihilate(signed_level, alpha, v, S)
                          : create(-signed_level, alpha, v, S);
}

Rat fock_inner(const FockState& a, const FockState& b, const SurfaceDatum& S) {
  const auto& A = a.labels();
  const auto& B = b.labels();
  if (A.empty() && B.empty()) return Rat(1);
  if (A.empty() || B.empty()) return Rat(0);
  FockLabel x = A.front();
  FockState arest(std::vector<FockLabel>(A.begin() + 1, A.end()), S);
  bool xodd = S.odd(x.cls);
  Rat total(0);
  int sign = 1;
  for (std::size_t j = 0; j < B.size(); ++j) {
    if (B[j].level == x.level) {
      const Rat& pr = S.pairing(x.cls, B[j].cls);
      if (pr != 0) {
        std::vector<FockLabel> brest;
        brest.reserve(B.size() - 1);
        for (std::size_t k = 0; k < B.size(); ++k)
          if (k != j) brest.push_back(B[k]);
        Rat term = Rat(x.level) * pr * fock_inner(arest, FockState(std::move(brest), S), S);
        total += (sign < 0) ? Rat(-term) : term;
      }
    }
    if (xodd && S.odd(B[j].cls)) sign = -sign;
  }
  return total;
}

Rat fock_inner(const FockVector& a, const FockVector& b, const SurfaceDatum& S) {
  Rat total(0);
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) total += ca * cb * fock_inner(sa, sb, S);
  return total;
}

namespace {

void enum_rec(const SurfaceDatum& S, const std::vector<FockLabel>& gens, std::size_t gi, long rem,
              std::vector<FockLabel>& cur, std::vector<FockState>& out) {
  if (gi == gens.size() || rem == 0) {
    out.emplace_back(cur, S);
    return;
  }
  const FockLabel& g = gens[gi];
  enum_rec(S, gens, gi + 1, rem, cur, out);
  long maxm = g.level > rem ? 0 : (S.odd(g.cls) ? 1 : rem / g.level);
  for (long m = 1; m <= maxm; ++m) {
    cur.push_back(g);
    enum_rec(S, gens, gi + 1, rem - m * g.level, cur, out);
  }
  for (long m = 1; m <= maxm; ++m) cur.pop_back();
}

}  // namespace

std::vector<FockState> enumerate_states(const SurfaceDatum& S, long max_energy) {
  if (max_energy < 0) throw contract_error("max_energy must be >= 0");
  std::vector<FockLabel> gens;
  for (long l = 1; l <= max_energy; ++l)
    for (int c = 0; c < S.class_count(); ++c) gens.push_back({l, c});
  std::vector<FockState> out;
  std::vector<FockLabel> cur;
  enum_rec(S, gens, 0, max_energy, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Packed basis state for the integral fast path: up to eight labels, one
// byte each, (level << 5) | class, ascending from the low byte. A zero byte
// marks the end.
using PackedState = std::uint64_t;

struct TermBuf {
  std::array<PackedState, 128> key;
  std::array<long long, 128> c;
  int n = 0;
  void add(PackedState k, long long v) {
    if (v == 0) return;
    for (int i = 0; i < n; ++i)
      if (key[i] == k) {
        c[i] += v;
        return;
      }
    if (n == 128) throw consistency_error("term buffer overflow");
    key[n] = k;
    c[n] = v;
    ++n;
  }
};

void fast_apply(long g, int cls, PackedState s, long long mult,
                const std::vector<std::vector<long long>>& P, std::uint32_t oddmask,
                TermBuf& out) {
  if (mult == 0) return;
  bool godd = (oddmask >> cls) & 1u;
  if (g > 0) {
    long long sign = 1;
    PackedState rest = s;
    for (int j = 0; rest != 0; ++j, rest >>= 8) {
      unsigned b = static_cast<unsigned>(rest & 0xFF);
      long lev = b >> 5;
      if (lev > g) break;
      int c2 = static_cast<int>(b & 31);
      if (lev == g) {
        long long pr = P[static_cast<std::size_t>(cls)][static_cast<std::size_t>(c2)];
        if (pr != 0) {
          PackedState low = s & ((1ULL << (8 * j)) - 1);
          PackedState high = (j >= 7) ? 0 : ((s >> (8 * (j + 1))) << (8 * j));
          out.add(low | high, mult * sign * g * pr);
        }
      }
      if (godd && ((oddmask >> c2) & 1u)) sign = -sign;
    }
    return;
  }
  long lv = -g;
  unsigned nb = (static_cast<unsigned>(lv) << 5) | static_cast<unsigned>(cls);
  int len = 0;
  for (PackedState t = s; t != 0; t >>= 8) ++len;
  if (len >= 8) throw consistency_error("packed state register overflow");
  long long sign = 1;
  int pos = 0;
  for (; pos < len; ++pos) {
    unsigned b = static_cast<unsigned>((s >> (8 * pos)) & 0xFF);
    if (b >= nb) break;
    if (godd && ((oddmask >> (b & 31)) & 1u)) sign = -sign;
  }
  if (godd && pos < len && static_cast<unsigned>((s >> (8 * pos)) & 0xFF) == nb)
    return;  // odd square is zero
  PackedState low = s & ((1ULL << (8 * pos)) - 1);
  PackedState up = (pos >= len) ? 0 : ((s >> (8 * pos)) << (8 * (pos + 1)));
  out.add(low | (static_cast<PackedState>(nb) << (8 * pos)) | up, mult * sign);
}

void pack_rec(const SurfaceDatum& S, const std::vector<FockLabel>& gens, std::size_t gi, long rem,
              PackedState acc, int len, std::vector<PackedState>& out) {
  if (gi == gens.size() || rem == 0) {
    out.push_back(acc);
    return;
  }
  const FockLabel& g = gens[gi];
  pack_rec(S, gens, gi + 1, rem, acc, len, out);
  long maxm = g.level > rem ? 0 : (S.odd(g.cls) ? 1 : rem / g.level);
  PackedState byte = (static_cast<PackedState>(g.level) << 5) | static_cast<PackedState>(g.cls);
  for (long m = 1; m <= maxm; ++m) {
    acc |= byte << (8 * (len + m - 1));
    pack_rec(S, gens, gi + 1, rem - m * g.level, acc, len + static_cast<int>(m), out);
  }
}

std::string packed_text(PackedState s) {
  if (s == 0) return "|0>";
  std::string out;
  for (; s != 0; s >>= 8) {
    unsigned b = static_cast<unsigned>(s & 0xFF);
    out += "p(-" + std::to_string(b >> 5) + ",c" + std::to_string(b & 31) + ") ";
  }
  return out + "|0>";
}

std::string relation_text(long a, int alpha, long b, int beta, long rank) {
  std::string out = "[p(" + std::to_string(a) + ",c" + std::to_string(alpha) + "), p(" +
                    std::to_string(b) + ",c" + std::to_string(beta) + ")]";
  if (rank > 0) out += " at rank " + std::to_string(rank);
  return out;
}

long long creation_scale(long signed_level, long rank) {
  if (rank == 0 || signed_level > 0) return 1;
  long lv = -signed_level;
  return ((rank * lv) % 2 == 0) ? -rank : rank;  // (-1)^(rank*lv - 1) * rank
}

RelationReport relations_fast(const SurfaceDatum& S, const std::vector<std::vector<long long>>& P,
                              long max_energy, long rank) {
  int K = S.class_count();
  std::uint32_t oddmask = 0;
  for (int c = 0; c < K; ++c)
    if (S.odd(c)) oddmask |= 1u << c;

  std::vector<FockLabel> gens;
  for (long l = 1; l <= max_energy; ++l)
    for (int c = 0; c < K; ++c) gens.push_back({l, c});
  std::vector<PackedState> states;
  pack_rec(S, gens, 0, max_energy, 0, 0, states);
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());

  std::vector<long> levels;
  for (long l = 1; l <= max_energy; ++l) {
    levels.push_back(l);
    levels.push_back(-l);
  }

  RelationReport rep;
  rep.states = static_cast<long long>(states.size());
  rep.pairs = static_cast<long long>(levels.size()) * static_cast<long long>(levels.size()) *
              static_cast<long long>(K) * static_cast<long long>(K);

  TermBuf buf, tmp;
  for (PackedState s : states) {
    for (long a : levels) {
      for (long b : levels) {
        long long sab = creation_scale(a, rank) * creation_scale(b, rank);
        for (int alpha = 0; alpha < K; ++alpha) {
          bool aodd = (oddmask >> alpha) & 1u;
          for (int beta = 0; beta < K; ++beta) {
            long long eps = (aodd && ((oddmask >> beta) & 1u)) ? -1 : 1;
            buf.n = 0;
            tmp.n = 0;
            fast_apply(b, beta, s, sab, P, oddmask, tmp);
            for (int i = 0; i < tmp.n; ++i)
              fast_apply(a, alpha, tmp.key[i], tmp.c[i], P, oddmask, buf);
            tmp.n = 0;
            fast_apply(a, alpha, s, -eps * sab, P, oddmask, tmp);
            for (int i = 0; i < tmp.n; ++i)
              fast_apply(b, beta, tmp.key[i], tmp.c[i], P, oddmask, buf);
            long long expected = 0;
            if (a + b == 0)
              expected =
                  sab * a * P[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(beta)];
            if (expected != 0) buf.add(s, -expected);
            ++rep.evaluations;
            for (int i = 0; i < buf.n; ++i) {
              if (buf.c[i] != 0) {
                ++rep.failure_count;
                if (rep.failures.size() < RelationReport::failure_cap) {
                  std::string got;
                  for (int k = 0; k < buf.n; ++k)
                    if (buf.c[k] != 0)
                      got += "(" + std::to_string(buf.c[k]) + ")*" + packed_text(buf.key[k]) + " ";
                  rep.failures.push_back({relation_text(a, alpha, b, beta, rank), packed_text(s),
                                          std::to_string(expected) + " * state", "residual " + got});
                }
                break;
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

RelationReport relations_generic(const SurfaceDatum& S, long max_energy, long rank) {
  int K = S.class_count();
  std::vector<FockState> states = enumerate_states(S, max_energy);
  std::vector<long> levels;
  for (long l = 1; l <= max_energy; ++l) {
    levels.push_back(l);
    levels.push_back(-l);
  }
  RelationReport rep;
  rep.states = static_cast<long long>(states.size());
  rep.pairs = static_cast<long long>(levels.size()) * static_cast<long long>(levels.size()) *
              static_cast<long long>(K) * static_cast<long long>(K);
  for (const FockState& st : states) {
    FockVector v;
    v.emplace(st, Rat(1));
    for (long a : levels) {
      for (long b : levels) {
        Rat sab = Rat(static_cast<long>(creation_scale(a, rank))) *
                  Rat(static_cast<long>(creation_scale(b, rank)));
        for (int alpha = 0; alpha < K; ++alpha) {
          for (int beta = 0; beta < K; ++beta) {
            Rat eps = (S.odd(alpha) && S.odd(beta)) ? Rat(-1) : Rat(1);
            FockVector bv = apply_generator(b, beta, v, S);
            FockVector abv = apply_generator(a, alpha, bv, S);
            FockVector av = apply_generator(a, alpha, v, S);
            FockVector bav = apply_generator(b, beta, av, S);
            FockVector got = fock_sum(fock_scaled(abv, sab), fock_scaled(bav, Rat(-eps * sab)));
            FockVector want;
            if (a + b == 0) {
              Rat e = sab * Rat(a) * S.pairing(alpha, beta);
              fock_add(want, st, e);
            }
            ++rep.evaluations;
            if (!fock_equal(got, want)) {
              ++rep.failure_count;
              if (rep.failures.size() < RelationReport::failure_cap)
                rep.failures.push_back({relation_text(a, alpha, b, beta, rank), st.text(),
                                        fock_text(want), fock_text(got)});
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

RelationReport check_relations(const SurfaceDatum& S, long max_energy, long rank) {
  if (max_energy < 1) throw contract_error("max_energy must be >= 1");
  if (rank < 0) throw contract_error("rank must be >= 0");
  auto ip = S.integral_pairing();
  bool fits = ip.has_value() && max_energy <= 6 && S.class_count() <= 31 && rank <= (1 << 10);
  if (fits)
    for (auto& row : *ip)
      for (long long e : row)
        if (e > (1LL << 20) || e < -(1LL << 20)) fits = false;
  if (fits) return relations_fast(S, *ip, max_energy, rank);
  return relations_generic(S, max_energy, rank);
}

SeriesT character(const SurfaceDatum& S, long order, long vacuum_dim) {
  if (order < 0) throw contract_error("order must be >= 0");
  SeriesT out(1, order);
  if (order == 0) return out;
  // counts[e][t + toff]: number of basis states of energy e whose degree
  // shifts sum to t. Built one generator at a time; even classes are
  // unbounded knapsack items, odd classes are zero-one items.
  long toff = 2 * (order - 1);
  std::vector<std::vector<long long>> counts(
      static_cast<std::size_t>(order), std::vector<long long>(static_cast<std::size_t>(4 * (order - 1) + 1), 0));
  counts[0][static_cast<std::size_t>(toff)] = 1;
  long tmax = 4 * (order - 1);
  for (long l = 1; l < order; ++l) {
    for (int c = 0; c < S.class_count(); ++c) {
      long d = S.degree(c) - 2;
      if (S.odd(c)) {
        for (long e = order - 1; e >= l; --e)
          for (long t = 0; t <= tmax; ++t) {
            long ts = t - d;
            if (ts < 0 || ts > tmax) continue;
            long long src = counts[static_cast<std::size_t>(e - l)][static_cast<std::size_t>(ts)];
            if (src == 0) continue;
            long long* dst = &counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
            if (__builtin_add_overflow(*dst, src, dst))
              throw consistency_error("state count overflow");
          }
      } else {
        for (long e = l; e < order; ++e)
          for (long t = 0; t <= tmax; ++t) {
            long ts = t - d;
            if (ts < 0 || ts > tmax) continue;
            long long src = counts[static_cast<std::size_t>(e - l)][static_cast<std::size_t>(ts)];
            if (src == 0) continue;
            long long* dst = &counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
            if (__builtin_add_overflow(*dst, src, dst))
              throw consistency_error("state count overflow");
          }
      }
    }
  }
  for (long e = 0; e < order; ++e) {
    LaurentT coef;
    for (long t = 0; t <= tmax; ++t) {
      long long n = counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
      if (n != 0) coef.add_term(t - toff, Rat(Int(std::to_string(n))) * Rat(vacuum_dim));
    }
    out.add_term(e, coef);
  }
  return out;
}

std::vector<Rat> recover_constants(long r, long pairing, long count) {
  if (r < 1) throw contract_error("rank must be >= 1");
  if (pairing == 0) throw contract_error("pairing must be nonzero");
  if (count < 0) throw contract_error("count must be >= 0");
  long ord = 2 * count + 1;
  SeriesQ base = SeriesQ::one(1, ord);
  base.add_term(2, (r % 2 == 0) ? Rat(-1) : Rat(1));
  SeriesQ lg = base.pow(r * pairing).logarithm();
  std::vector<Rat> out;
  for (long n = 1; n <= count; ++n) {
    Rat c = lg.coeff(2 * n) * Rat(n * n) / Rat(pairing);
    out.push_back(c);
  }
  return out;
}

}  // namespace oscalg
