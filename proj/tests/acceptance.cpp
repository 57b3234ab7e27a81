// Acceptance suite: end-to-end checks of every headline identity, one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "redheffer/redheffer.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace redheffer;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

// 1. det R_n = M(n) exactly for n = 1..200.
bool criterion_determinant(std::string& detail) {
    MoebiusSieve sieve(200);
    if (det_bareiss(redheffer_classic(8).matrix) != -2) {
        detail = "det R_8 != -2";
        return false;
    }
    for (std::int64_t n = 1; n <= 200; ++n) {
        if (det_bareiss(redheffer_classic(n).matrix) != sieve.mertens(n)) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..200";
    return true;
}

// 2. perm R_n: Ryser = factorization formula = chain count for n = 1..20,
//    with the known values at n = 1..10.
bool criterion_permanent(std::string& detail) {
    const FactorCountTable table(20);
    for (std::int64_t n = 1; n <= 20; ++n) {
        const BigInt by_ryser = permanent_ryser(redheffer_classic(n).matrix);
        const BigInt by_formula = permanent_formula(table, n);
        const BigInt by_chains = count_chains_through_zero(divisor_poset(n));
        if (by_ryser != by_formula || by_ryser != by_chains) {
            detail = "route mismatch at n=" + std::to_string(n);
            return false;
        }
        if (n <= 10 && by_ryser != testutil::kPermanentSequence[n - 1]) {
            detail = "known value mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..20, three routes";
    return true;
}

// 3. For n <= 8, exhaustive search over all n! permutations finds exactly
//    the enumerated support, and the signs sum to M(n).
bool criterion_support(std::string& detail) {
    MoebiusSieve sieve(8);
    for (std::int64_t n = 1; n <= 8; ++n) {
        const Poset p = divisor_poset(n);
        if (!verify_contributing_support(p)) {
            detail = "support mismatch at n=" + std::to_string(n);
            return false;
        }
        BigInt sign_sum(0);
        for_each_contributing_permutation(p, [&](const ContributingPermutation& cp) {
            sign_sum += cp.sign();
        });
        if (sign_sum != sieve.mertens(n)) {
            detail = "sign sum mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..8, exhaustive";
    return true;
}

// 4. Permanent and determinant identities on 500 random posets with 2..12
//    elements.
bool criterion_random_posets(std::string& detail) {
    std::mt19937_64 rng(977);
    for (int round = 0; round < 500; ++round) {
        const std::size_t size = 2 + static_cast<std::size_t>(rng() % 11);
        const Poset p = random_poset(rng, size);
        const RedhefferMatrix r = redheffer_general(p);
        if (permanent_ryser(r.matrix) != count_chains_through_zero(p)) {
            detail = "permanent/chain mismatch in case " + std::to_string(round);
            return false;
        }
        const BigInt det = det_bareiss(r.matrix);
        if (det != det_via_moebius(p) || det != signed_chain_sum(p)) {
            detail = "determinant mismatch in case " + std::to_string(round);
            return false;
        }
    }
    detail = "500 random posets, 2..12 elements";
    return true;
}

// 5. Boolean lattice: chain counts 1,2,6,26,150,1082 and singularity.
bool criterion_boolean(std::string& detail) {
    for (int n = 0; n <= 5; ++n) {
        const Poset b = boolean_lattice(n);
        if (count_chains_through_zero(b) != testutil::kBooleanChainCounts[n]) {
            detail = "chain count mismatch at n=" + std::to_string(n);
            return false;
        }
        if (n >= 1 && det_via_moebius(b) != 0) {
            detail = "moebius determinant nonzero at n=" + std::to_string(n);
            return false;
        }
        if (n <= 4 && n >= 1 && det_bareiss(redheffer_general(b).matrix) != 0) {
            detail = "matrix determinant nonzero at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=0..5 (matrix det through n=4)";
    return true;
}

// 6. Inverse formula for n <= 60: exact R * R^-1 = I, agreement with the
//    Sherman-Morrison route, SingularError exactly when M(n) = 0.
bool criterion_inverse(std::string& detail) {
    MoebiusSieve sieve(60);
    for (std::int64_t n = 1; n <= 60; ++n) {
        const Poset p = divisor_poset(n);
        if (sieve.mertens(n) == 0) {
            try {
                redheffer_inverse(p);
                detail = "expected SingularError at n=" + std::to_string(n);
                return false;
            } catch (const SingularError&) {
                continue;
            }
        }
        const RatMatrix inv = redheffer_inverse(p);
        if (!is_identity(mat_mul(to_rational(redheffer_classic(n).matrix), inv))) {
            detail = "R * R^-1 != I at n=" + std::to_string(n);
            return false;
        }
        std::vector<BigRat> u(p.size(), BigRat(1)), v(p.size(), BigRat(0));
        u[0] = 0;
        v[0] = 1;
        if (sherman_morrison_inverse(moebius_table(p).as_rat_matrix(), u, v) != inv) {
            detail = "Sherman-Morrison mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..60";
    return true;
}

// 7. Signed factorization identity up to 10^4.
bool criterion_signed_factorizations(std::string& detail) {
    const std::int64_t limit = 10'000;
    MoebiusSieve sieve(limit);
    const auto table = signed_factorization_table(limit);
    for (std::int64_t r = 1; r <= limit; ++r) {
        if (table[static_cast<std::size_t>(r)] != sieve.moebius(r)) {
            detail = "mismatch at r=" + std::to_string(r);
            return false;
        }
    }
    if (signed_factorization_sum(9973) != -1 || signed_factorization_sum(8) != 0) {
        detail = "spot check failed";
        return false;
    }
    detail = "r=1..10000";
    return true;
}

// 8. Growth exponent over [1e5, 1e6] lies in [1.65, 1.80].
bool criterion_growth(std::string& detail) {
    const double slope = growth_exponent_estimate(100'000, 1'000'000);
    char buf[64];
    std::snprintf(buf, sizeof buf, "slope=%.4f in [1.65, 1.80]", slope);
    detail = buf;
    return slope >= 1.65 && slope <= 1.80;
}

// 9. det_bareiss and permanent_ryser agree with naive expansion oracles on
//    >= 10^4 random matrices up to 7x7 with entries in {-2..2}.
bool criterion_oracles(std::string& detail) {
    std::mt19937_64 rng(1699);
    int cases = 0;
    for (int round = 0; round < 1500; ++round) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const testutil::I64Matrix m = testutil::random_matrix(rng, n, -2, 2);
            const IntMatrix mi = testutil::to_bigint(m);
            ++cases;
            if (det_bareiss(mi) != BigInt(static_cast<long>(testutil::det_cofactor(m)))) {
                detail = "determinant mismatch, case " + std::to_string(cases);
                return false;
            }
            if (permanent_ryser(mi) !=
                BigInt(static_cast<long>(testutil::permanent_by_permutations(m)))) {
                detail = "permanent mismatch, case " + std::to_string(cases);
                return false;
            }
        }
    }
    detail = std::to_string(cases) + " random matrices";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 determinant equals Mertens", criterion_determinant},
        {"2 permanent, three routes", criterion_permanent},
        {"3 contributing permutations", criterion_support},
        {"4 random posets", criterion_random_posets},
        {"5 Boolean lattice", criterion_boolean},
        {"6 closed-form inverse", criterion_inverse},
        {"7 signed factorizations", criterion_signed_factorizations},
        {"8 growth exponent", criterion_growth},
        {"9 naive-oracle agreement", criterion_oracles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
