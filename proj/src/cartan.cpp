#include "qchar/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace qchar {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::AffineA: return "A~";
  }
  return "?";
}

std::string CartanData::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::AffineA: os << "A" << rank << "~"; return os.str();
    default: os << family_name(family) << rank; return os.str();
  }
}

std::vector<int> CartanData::neighbors_into(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= n(); ++j)
    if (j != i && C(j, i) < 0) out.push_back(j);
  return out;
}

namespace {

CartanData make(Family fam, int rank, int nodes) {
  CartanData cd;
  cd.family = fam;
  cd.rank = rank;
  cd.mat.assign(nodes, std::vector<int>(nodes, 0));
  for (int i = 0; i < nodes; ++i) cd.mat[i][i] = 2;
  cd.sym.assign(nodes, 1);
  return cd;
}

void link(CartanData& cd, int i, int j, int cij, int cji) {  // 1-based
  cd.mat[i - 1][j - 1] = cij;
  cd.mat[j - 1][i - 1] = cji;
}

}  // namespace

CartanData build_cartan(Family family, int rank) {
  auto bad = [&](const char* need) {
    std::ostringstream os;
    os << "invalid rank " << rank << " for family " << family_name(family)
       << " (need " << need << ")";
    throw std::invalid_argument(os.str());
  };
  switch (family) {
    case Family::A: {
      if (rank < 1) bad("n >= 1");
      CartanData cd = make(family, rank, rank);
      for (int i = 1; i < rank; ++i) link(cd, i, i + 1, -1, -1);
      return cd;
    }
    case Family::B: {
      if (rank < 2) bad("n >= 2");
      CartanData cd = make(family, rank, rank);
      for (int i = 1; i < rank; ++i) link(cd, i, i + 1, -1, -1);
      link(cd, rank - 1, rank, -1, -2);  // C_{n,n-1} = -2
      for (int i = 0; i < rank - 1; ++i) cd.sym[i] = 2;
      return cd;
    }
    case Family::C: {
      if (rank < 2) bad("n >= 2");
      CartanData cd = make(family, rank, rank);
      for (int i = 1; i < rank; ++i) link(cd, i, i + 1, -1, -1);
      link(cd, rank - 1, rank, -2, -1);  // C_{n-1,n} = -2
      cd.sym[rank - 1] = 2;
      return cd;
    }
    case Family::D: {
      if (rank < 4) bad("n >= 4");
      CartanData cd = make(family, rank, rank);
      for (int i = 1; i < rank - 1; ++i) link(cd, i, i + 1, -1, -1);
      link(cd, rank - 2, rank, -1, -1);
      return cd;
    }
    case Family::F4: {
      if (rank != 4) bad("n = 4");
      CartanData cd = make(family, 4, 4);
      link(cd, 1, 2, -1, -1);
      link(cd, 2, 3, -2, -1);  // C_{2,3} = -2, C_{3,2} = -1
      link(cd, 3, 4, -1, -1);
      cd.sym = {1, 1, 2, 2};
      return cd;
    }
    case Family::G2: {
      if (rank != 2) bad("n = 2");
      CartanData cd = make(family, 2, 2);
      link(cd, 1, 2, -1, -3);  // C_{2,1} = -3
      cd.sym = {3, 1};
      return cd;
    }
    case Family::AffineA: {
      if (rank < 2) bad("l >= 2");
      const int nodes = rank + 1;
      CartanData cd = make(family, rank, nodes);
      for (int i = 1; i <= nodes; ++i) {
        int j = (i % nodes) + 1;
        link(cd, i, j, -1, -1);
      }
      return cd;
    }
  }
  throw std::logic_error("unreachable family");
}

CartanData parse_family(const std::string& spec) {
  if (spec == "F4") return build_cartan(Family::F4, 4);
  if (spec == "G2") return build_cartan(Family::G2, 2);
  if (spec.size() >= 2) {
    char f = spec[0];
    std::string rest = spec.substr(1);
    bool affine = false;
    if (!rest.empty() && rest.back() == '~') {
      affine = true;
      rest.pop_back();
    }
    try {
      size_t pos = 0;
      int rank = std::stoi(rest, &pos);
      if (pos == rest.size() && rank > 0) {
        if (affine) {
          if (f == 'A') return build_cartan(Family::AffineA, rank);
        } else {
          switch (f) {
            case 'A': return build_cartan(Family::A, rank);
            case 'B': return build_cartan(Family::B, rank);
            case 'C': return build_cartan(Family::C, rank);
            case 'D': return build_cartan(Family::D, rank);
            default: break;
          }
        }
      }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw std::invalid_argument("cannot parse family spec '" + spec +
                              "' (expected e.g. A5, B3, C4, D4, F4, G2, A2~)");
}

LaurentPoly quantum_integer(int l) {
  if (l == 0) return LaurentPoly();
  if (l < 0) return -quantum_integer(-l);
  LaurentPoly p;
  for (int k = 0; k < l; ++k) p.add_term(l - 1 - 2 * k, 1);
  return p;
}

ZLaurentMatrix quantized_cartan(const CartanData& cd) {
  const int n = cd.n();
  ZLaurentMatrix m;
  m.entry.assign(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        m.entry[i - 1][j - 1] = LaurentPoly::monomial(cd.r(i)) +
                                LaurentPoly::monomial(-cd.r(i));
      } else {
        m.entry[i - 1][j - 1] = quantum_integer(cd.C(i, j));
      }
    }
  }
  return m;
}

/* Bareiss fraction-free elimination: every division is exact in the
 * Laurent polynomial ring, so the result is the exact determinant. */
LaurentPoly laurent_determinant(const ZLaurentMatrix& m) {
  const int n = m.n();
  if (n == 0) return LaurentPoly(1);
  std::vector<std::vector<LaurentPoly>> a = m.entry;
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) { p = i; break; }
      if (p < 0) return LaurentPoly();  // singular
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

bool is_invertible(const ZLaurentMatrix& m) {
  return !laurent_determinant(m).is_zero();
}

bool invertibility_sufficient(const CartanData& cd) {
  for (int i = 1; i <= cd.n(); ++i)
    for (int j = 1; j <= cd.n(); ++j)
      if (i != j && cd.C(i, j) < -1 && -cd.C(j, i) > cd.r(i)) return false;
  return true;
}

bool is_finite_type(const std::vector<std::vector<int>>& c,
                    const std::vector<int>& r) {
  // Sylvester criterion on B = diag(r) * C, exact over long long.
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = static_cast<long long>(r[i]) * c[i][j];
  for (int k = 1; k <= n; ++k) {
    // determinant of leading k x k minor by fraction-free elimination
    std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = b[i][j];
    long long prev = 1;
    int sign = 1;
    bool singular = false;
    for (int col = 0; col < k - 1 && !singular; ++col) {
      if (a[col][col] == 0) {
        int p = -1;
        for (int i = col + 1; i < k; ++i)
          if (a[i][col] != 0) { p = i; break; }
        if (p < 0) { singular = true; break; }
        std::swap(a[col], a[p]);
        sign = -sign;
      }
      for (int i = col + 1; i < k; ++i) {
        for (int j = col + 1; j < k; ++j)
          a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) / prev;
        a[i][col] = 0;
      }
      prev = a[col][col];
    }
    long long det = singular ? 0 : sign * a[k - 1][k - 1];
    if (det <= 0) return false;
  }
  return true;
}

}  // namespace qchar
