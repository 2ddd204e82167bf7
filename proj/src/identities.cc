#include "balkit/identities.h"

#include <array>
#include <stdexcept>
#include <string>

#include "balkit/errors.h"

namespace balkit {
namespace {

using T = const TermSource&;

// Exact half of an index sum/difference. The domain's parity guard has
// already run; this only catches catalog mistakes.
Index half(Index x) {
  if (x % 2 != 0) throw ExactnessError("half-index of an odd value");
  return x / 2;
}

constexpr IndexDomain kAnyPair{};
constexpr IndexDomain kNGeM{.order = IndexOrder::kNGeM};
constexpr IndexDomain kNGeMSameParity{.order = IndexOrder::kNGeM, .same_parity = true};
constexpr IndexDomain kNGeMGe1{.n_min = 1, .m_min = 1, .order = IndexOrder::kNGeM};
constexpr IndexDomain kNGtMGe1{.n_min = 1, .m_min = 1, .order = IndexOrder::kNGtM};
constexpr IndexDomain kNLeMGe1{.n_min = 1, .m_min = 1, .order = IndexOrder::kNLeM};
constexpr IndexDomain kUnaryFrom0{};
constexpr IndexDomain kUnaryFrom1{.n_min = 1};

IdentityDescriptor equation(std::string id, int arity, IndexDomain domain, SideFn lhs,
                            SideFn rhs, std::string statement) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.arity = arity;
  d.kind = StatementKind::kEquation;
  d.domain = domain;
  d.lhs = std::move(lhs);
  d.rhs = std::move(rhs);
  d.statement = std::move(statement);
  return d;
}

// value == expected (mod k). Both sides are reported as least nonnegative
// residues, so an expected residue of -1 shows up as k - 1.
IdentityDescriptor congruence(std::string id, int arity, IndexDomain domain, SideFn value,
                              unsigned long k, SideFn expected, std::string statement) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.arity = arity;
  d.kind = StatementKind::kCongruence;
  d.domain = domain;
  d.modulus = k;
  d.lhs = [value = std::move(value), k](T t, Index n, Index m) {
    return residue(value(t, n, m), k);
  };
  d.rhs = [expected = std::move(expected), k](T t, Index n, Index m) {
    return residue(expected(t, n, m), k);
  };
  d.statement = std::move(statement);
  return d;
}

SideFn constant(long v) {
  return [v](T, Index, Index) { return BigInt(v); };
}

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> c;
  c.reserve(36);

  c.push_back(equation(
      "B_ADD", 2, kAnyPair,
      [](T t, Index n, Index m) { return BigInt(t.B(n + m)); },
      [](T t, Index n, Index m) { return BigInt(t.B(n) * t.C(m) + t.B(m) * t.C(n)); },
      "B(n+m) = B(n)C(m) + B(m)C(n)"));
  c.push_back(equation(
      "B_SUB", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.B(n - m)); },
      [](T t, Index n, Index m) { return BigInt(t.B(n) * t.C(m) - t.B(m) * t.C(n)); },
      "B(n-m) = B(n)C(m) - B(m)C(n)"));
  c.push_back(equation(
      "B_DIFF_HALF", 2, kNGeMSameParity,
      [](T t, Index n, Index m) { return BigInt(t.B(n) - t.B(m)); },
      [](T t, Index n, Index m) {
        return BigInt(2 * t.B(half(n - m)) * t.C(half(n + m)));
      },
      "B(n) - B(m) = 2 B((n-m)/2) C((n+m)/2)"));
  c.push_back(equation(
      "B_DIFF_EVEN", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.B(2 * n) - t.B(2 * m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.B(n - m) * t.C(n + m)); },
      "B(2n) - B(2m) = 2 B(n-m) C(n+m)"));
  c.push_back(equation(
      "B_2N_MINUS6", 1, kUnaryFrom1,
      [](T t, Index n, Index) { return BigInt(t.B(2 * n) - 6); },
      [](T t, Index n, Index) { return BigInt(2 * t.B(n - 1) * t.C(n + 1)); },
      "B(2n) - 6 = 2 B(n-1) C(n+1)"));
  c.push_back(equation(
      "B_2N_SPLIT", 2, kNGeM,
      [](T t, Index n, Index) { return BigInt(t.B(2 * n)); },
      [](T t, Index n, Index m) {
        return BigInt(2 * (t.B(n - m) * t.C(n + m) + t.B(m) * t.C(m)));
      },
      "B(2n) = 2 (B(n-m)C(n+m) + B(m)C(m))"));
  c.push_back(equation(
      "B_SUM_HALF", 2, kNGeMSameParity,
      [](T t, Index n, Index m) { return BigInt(t.B(n) + t.B(m)); },
      [](T t, Index n, Index m) {
        return BigInt(2 * t.B(half(n + m)) * t.C(half(n - m)));
      },
      "B(n) + B(m) = 2 B((n+m)/2) C((n-m)/2)"));
  c.push_back(equation(
      "B_SUM_EVEN", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.B(2 * n) + t.B(2 * m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.B(n + m) * t.C(n - m)); },
      "B(2n) + B(2m) = 2 B(n+m) C(n-m)"));
  c.push_back(equation(
      "B_SHIFT_ADD", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.B(n - m) * t.C(n) + t.B(n) * t.C(n - m)); },
      [](T t, Index n, Index m) { return BigInt(t.B(2 * n - m)); },
      "B(n-m)C(n) + B(n)C(n-m) = B(2n-m)"));
  c.push_back(equation(
      "B_SHIFT_SUB", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.B(n) * t.C(n - m) - t.B(n - m) * t.C(n)); },
      [](T t, Index, Index m) { return BigInt(t.B(m)); },
      "B(n)C(n-m) - B(n-m)C(n) = B(m)"));
  c.push_back(equation(
      "C_SUM_HALF", 2, kNGeMSameParity,
      [](T t, Index n, Index m) { return BigInt(t.C(n) + t.C(m)); },
      [](T t, Index n, Index m) {
        return BigInt(2 * t.C(half(n + m)) * t.C(half(n - m)));
      },
      "C(n) + C(m) = 2 C((n+m)/2) C((n-m)/2)"));
  c.push_back(equation(
      "C_DIFF_HALF", 2, kNGeMSameParity,
      [](T t, Index n, Index m) { return BigInt(t.C(n) - t.C(m)); },
      [](T t, Index n, Index m) {
        return BigInt(16 * t.B(half(n + m)) * t.B(half(n - m)));
      },
      "C(n) - C(m) = 16 B((n+m)/2) B((n-m)/2)"));
  c.push_back(equation(
      "C_SUM_EVEN", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.C(2 * n) + t.C(2 * m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.C(n + m) * t.C(n - m)); },
      "C(2n) + C(2m) = 2 C(n+m) C(n-m)"));
  c.push_back(equation(
      "C_DIFF_EVEN", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(t.C(2 * n) - t.C(2 * m)); },
      [](T t, Index n, Index m) { return BigInt(16 * t.B(n + m) * t.B(n - m)); },
      "C(2n) - C(2m) = 16 B(n+m) B(n-m)"));
  c.push_back(equation(
      "C_ADD", 2, kNGeM,
      [](T t, Index n, Index m) {
        return BigInt(t.C(n) * t.C(n - m) + 8 * t.B(n) * t.B(n - m));
      },
      [](T t, Index n, Index m) { return BigInt(t.C(2 * n - m)); },
      "C(n)C(n-m) + 8 B(n)B(n-m) = C(2n-m)"));
  c.push_back(equation(
      "C_SUB", 2, kNGeM,
      [](T t, Index n, Index m) {
        return BigInt(t.C(n) * t.C(n - m) - 8 * t.B(n) * t.B(n - m));
      },
      [](T t, Index, Index m) { return BigInt(t.C(m)); },
      "C(n)C(n-m) - 8 B(n)B(n-m) = C(m)"));
  c.push_back(equation(
      "CB_MIX_MINUS", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(16 * (t.C(n) * t.C(m) - t.B(n) * t.B(m))); },
      [](T t, Index n, Index m) { return BigInt(7 * t.C(n + m) + 9 * t.C(n - m)); },
      "16 (C(n)C(m) - B(n)B(m)) = 7 C(n+m) + 9 C(n-m)"));
  c.push_back(equation(
      "CB_MIX_PLUS", 2, kNGeM,
      [](T t, Index n, Index m) { return BigInt(16 * (t.C(n) * t.C(m) + t.B(n) * t.B(m))); },
      [](T t, Index n, Index m) { return BigInt(9 * t.C(n + m) + 7 * t.C(n - m)); },
      "16 (C(n)C(m) + B(n)B(m)) = 9 C(n+m) + 7 C(n-m)"));
  c.push_back(equation(
      "LC_PROD", 2, kNGeMGe1,
      [](T t, Index n, Index m) { return BigInt(t.C(n + m - 1) - t.C(n - m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.c(n) * t.c(m)); },
      "C(n+m-1) - C(n-m) = 2 c(n)c(m)"));
  c.push_back(equation(
      "COB_PROD", 2, kNGeMGe1,
      [](T t, Index n, Index m) { return BigInt(t.C(n + m - 1) + t.C(n - m)); },
      [](T t, Index n, Index m) {
        return BigInt(16 * t.b(n) * t.b(m) + 8 * (t.b(n) + t.b(m)) + 4);
      },
      "C(n+m-1) + C(n-m) = 16 b(n)b(m) + 8 (b(n) + b(m)) + 4"));
  c.push_back(equation(
      "B_COB_DIFF_GT", 2, kNGtMGe1,
      [](T t, Index n, Index m) { return BigInt(t.b(n + m) - t.b(n - m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.c(n) * t.B(m)); },
      "b(n+m) - b(n-m) = 2 c(n)B(m)"));
  c.push_back(equation(
      "B_COB_DIFF_LE", 2, kNLeMGe1,
      [](T t, Index n, Index m) { return BigInt(t.b(n + m) - t.b(m - n + 1)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.c(n) * t.B(m)); },
      "b(n+m) - b(m-n+1) = 2 c(n)B(m)"));
  c.push_back(equation(
      "B_COB_SUM_GT", 2, kNGtMGe1,
      [](T t, Index n, Index m) { return BigInt(t.b(n + m) + t.b(n - m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.b(n) * t.C(m) + t.C(m) - 1); },
      "b(n+m) + b(n-m) = 2 b(n)C(m) + C(m) - 1"));
  {
    IdentityDescriptor d = equation(
        "B_COB_SUM_LE", 2, kNLeMGe1,
        [](T t, Index n, Index m) { return BigInt(t.b(n + m) + t.b(m - n + 1)); },
        [](T t, Index n, Index m) { return BigInt(2 * t.b(n) * t.C(m) + t.C(m) - 1); },
        "b(n+m) + b(m-n+1) = 2 b(n)C(m) + C(m) - 1");
    d.alternate_lhs = [](T t, Index n, Index m) {
      return BigInt(t.b(n + m) - t.b(m - n + 1));
    };
    d.note =
        "also seen printed with b(n+m) - b(m-n+1) on the left; that reading is false "
        "(n=1, m=2: 14 != 16) while the '+' form holds";
    c.push_back(std::move(d));
  }
  c.push_back(equation(
      "LC_SUM_GT", 2, kNGtMGe1,
      [](T t, Index n, Index m) { return BigInt(t.c(n + m) + t.c(n - m)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.c(n) * t.C(m)); },
      "c(n+m) + c(n-m) = 2 c(n)C(m)"));
  c.push_back(equation(
      "LC_SUM_LE", 2, kNLeMGe1,
      [](T t, Index n, Index m) { return BigInt(t.c(n + m) - t.c(m - n + 1)); },
      [](T t, Index n, Index m) { return BigInt(2 * t.c(n) * t.C(m)); },
      "c(n+m) - c(m-n+1) = 2 c(n)C(m)"));
  c.push_back(equation(
      "C2N_PLUS1", 1, kUnaryFrom1,
      [](T t, Index n, Index) { return BigInt(t.c(2 * n) + 1); },
      [](T t, Index n, Index) { return BigInt(8 * (2 * t.b(n) + 1) * t.B(n)); },
      "c(2n) + 1 = 8 (2 b(n) + 1) B(n)"));

  c.push_back(congruence(
      "PARITY_B", 1, kUnaryFrom0, [](T t, Index n, Index) { return BigInt(t.B(n)); }, 2,
      [](T, Index n, Index) { return BigInt(static_cast<unsigned long>(n % 2)); },
      "B(n) = n (mod 2)"));
  c.push_back(congruence(
      "ODD_C", 1, kUnaryFrom0, [](T t, Index n, Index) { return BigInt(t.C(n)); }, 2,
      constant(1), "C(n) = 1 (mod 2)"));
  c.push_back(congruence(
      "MOD16_C", 2, kNGeMSameParity,
      [](T t, Index n, Index m) { return BigInt(t.C(n) - t.C(m)); }, 16, constant(0),
      "C(n) - C(m) = 0 (mod 16)"));
  c.push_back(congruence(
      "MOD4_CSUM", 1, kUnaryFrom1,
      [](T t, Index n, Index) { return BigInt(t.C(n - 1) + t.C(n)); }, 4, constant(0),
      "C(n-1) + C(n) = 0 (mod 4)"));
  c.push_back(congruence(
      "EVEN_b", 1, kUnaryFrom1, [](T t, Index n, Index) { return BigInt(t.b(n)); }, 2,
      constant(0), "b(n) = 0 (mod 2)"));
  c.push_back(congruence(
      "MOD4_bDIFF", 1, kUnaryFrom1,
      [](T t, Index n, Index) { return BigInt(t.b(2 * n + 1) - t.b(2 * n)); }, 4,
      constant(0), "b(2n+1) - b(2n) = 0 (mod 4)"));
  c.push_back(congruence(
      "ODD_c", 1, kUnaryFrom1, [](T t, Index n, Index) { return BigInt(t.c(n)); }, 2,
      constant(1), "c(n) = 1 (mod 2)"));
  c.push_back(congruence(
      "MOD8_c", 1, kUnaryFrom1, [](T t, Index n, Index) { return BigInt(t.c(2 * n)); }, 8,
      constant(-1), "c(2n) = -1 (mod 8)"));
  c.push_back(congruence(
      "MOD16_c", 1, kUnaryFrom1, [](T t, Index n, Index) { return BigInt(t.c(4 * n)); }, 16,
      constant(-1), "c(4n) = -1 (mod 16)"));
  return c;
}

std::size_t slot(SequenceKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

const BigInt& DirectTerms::get(SequenceKind kind, Index n) const {
  check_index(kind, n);
  auto key = std::make_pair(kind, n);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, term_doubling(kind, n)).first;
  return it->second;
}

TermTable::TermTable(Index max_index) : max_index_(max_index) {
  for (SequenceKind kind : kAllKinds) {
    auto& values = values_[slot(kind)];
    Index first = first_index(kind);
    if (max_index < first) continue;
    values.reserve(max_index - first + 1);
    SequenceCursor cursor(kind);
    for (;;) {
      values.push_back(cursor.value());
      if (cursor.index() == max_index) break;
      cursor.advance();
    }
  }
}

const BigInt& TermTable::get(SequenceKind kind, Index n) const {
  check_index(kind, n);
  if (n > max_index_) {
    throw std::out_of_range("term table holds indices up to " + std::to_string(max_index_) +
                            ", requested " + std::to_string(n));
  }
  return values_[slot(kind)][n - first_index(kind)];
}

bool IndexDomain::contains(Index n, std::optional<Index> m) const {
  if (n < n_min) return false;
  if (!m) return true;
  if (*m < m_min) return false;
  switch (order) {
    case IndexOrder::kAny: break;
    case IndexOrder::kNGeM: if (!(n >= *m)) return false; break;
    case IndexOrder::kNGtM: if (!(n > *m)) return false; break;
    case IndexOrder::kNLeM: if (!(n <= *m)) return false; break;
  }
  if (same_parity && (n % 2) != (*m % 2)) return false;
  return true;
}

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> catalog = build_catalog();
  return catalog;
}

const IdentityDescriptor* find_identity(std::span<const IdentityDescriptor> catalog,
                                        std::string_view id) {
  for (const auto& d : catalog) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const IdentityDescriptor& lookup(std::string_view id) {
  const IdentityDescriptor* d = find_identity(list_identities(), id);
  if (d == nullptr) throw UnknownIdentityError(std::string(id));
  return *d;
}

bool domain_check(const IdentityDescriptor& d, Index n, std::optional<Index> m) {
  if (d.arity == 2 && !m) {
    throw ArityError(d.id + " takes two indices (n, m)");
  }
  if (d.arity == 1 && m) {
    throw ArityError(d.id + " takes a single index");
  }
  return d.domain.contains(n, m);
}

bool domain_check(std::string_view id, Index n, std::optional<Index> m) {
  return domain_check(lookup(id), n, m);
}

EvalResult evaluate(const IdentityDescriptor& d, const TermSource& terms, Index n,
                    std::optional<Index> m) {
  if (!domain_check(d, n, m)) {
    throw DomainError(d.id + ": indices outside the statement's domain (n=" +
                      std::to_string(n) + (m ? ", m=" + std::to_string(*m) : "") + ")");
  }
  EvalResult r;
  r.id = d.id;
  r.n = n;
  r.m = m;
  r.lhs = d.lhs(terms, n, m.value_or(0));
  r.rhs = d.rhs(terms, n, m.value_or(0));
  r.holds = (r.lhs == r.rhs);
  return r;
}

EvalResult evaluate(std::string_view id, Index n, std::optional<Index> m) {
  DirectTerms terms;
  return evaluate(lookup(id), terms, n, m);
}

}  // namespace balkit
