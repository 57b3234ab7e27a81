#pragma once

// Command-line front end. All output is plain text or TSV, deterministic
// across runs: fixed ordering, no timestamps. Exit codes: 0 success,
// 1 verification failure or module error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redheffer/chains.hpp"
#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"
#include "redheffer/numtheory.hpp"
#include "redheffer/poset.hpp"
#include "redheffer/poset_json.hpp"
#include "redheffer/random_poset.hpp"
#include "redheffer/redheffer_matrix.hpp"

namespace redheffer::cli {

namespace detail {

class Reporter {
public:
    explicit Reporter(std::ostream& out) : out_(out) {}

    void ok(const std::string& identity, const std::string& scope) {
        out_ << "OK " << identity << ' ' << scope << '\n';
    }

    template <typename L, typename R>
    void fail(const std::string& identity, const std::string& scope, const L& lhs, const R& rhs) {
        failed_ = true;
        out_ << "FAIL " << identity << ' ' << scope << " lhs=" << lhs << " rhs=" << rhs << '\n';
    }

    void fail(const std::string& identity, const std::string& scope) {
        failed_ = true;
        out_ << "FAIL " << identity << ' ' << scope << '\n';
    }

    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

// R * R^-1 = I and agreement with the Sherman-Morrison route applied to
// the rank-1 decomposition R = Z + (1 - e0) e0^T.
inline bool check_inverse_consistency(const Poset& p) {
    const RatMatrix inv = redheffer_inverse(p);
    const RedhefferMatrix r = redheffer_general(p);
    if (!is_identity(mat_mul(to_rational(r.matrix), inv))) return false;
    const std::size_t n = p.size();
    std::vector<BigRat> u(n, BigRat(1)), v(n, BigRat(0));
    u[0] = 0; // positions: the 0 element sits at position 0
    v[0] = 1;
    const RatMatrix via_sm = sherman_morrison_inverse(moebius_table(p).as_rat_matrix(), u, v);
    return via_sm == inv;
}

inline void verify_classic(std::int64_t max, Reporter& rep) {
    const std::int64_t det_max = std::min<std::int64_t>(max, kDetDimensionCap);
    MoebiusSieve sieve(std::max<std::int64_t>(det_max, 1));
    bool all_ok = true;
    for (std::int64_t n = 1; n <= det_max && all_ok; ++n) {
        const BigInt lhs = det_bareiss(redheffer_classic(n).matrix);
        const std::int64_t rhs = sieve.mertens(n);
        if (lhs != rhs) {
            rep.fail("eq1", "n=" + std::to_string(n), lhs, rhs);
            all_ok = false;
        }
    }
    if (all_ok) rep.ok("eq1", "n=" + std::to_string(det_max));

    const std::int64_t perm_max = std::min<std::int64_t>(max, kPermanentDimensionCap);
    const FactorCountTable table(std::max<std::int64_t>(perm_max, 1));
    all_ok = true;
    for (std::int64_t n = 1; n <= perm_max && all_ok; ++n) {
        const BigInt by_ryser = permanent_ryser(redheffer_classic(n).matrix);
        const BigInt by_formula = permanent_formula(table, n);
        const BigInt by_chains = count_chains_through_zero(divisor_poset(n));
        if (by_ryser != by_formula || by_ryser != by_chains) {
            rep.fail("perm3", "n=" + std::to_string(n), by_ryser,
                     by_formula.get_str() + "/" + by_chains.get_str());
            all_ok = false;
        }
    }
    if (all_ok) rep.ok("perm3", "n=" + std::to_string(perm_max));

    const std::int64_t support_max = std::min<std::int64_t>(max, 8);
    all_ok = true;
    for (std::int64_t n = 1; n <= support_max && all_ok; ++n) {
        if (!verify_contributing_support(divisor_poset(n))) {
            rep.fail("support", "n=" + std::to_string(n));
            all_ok = false;
        }
    }
    if (all_ok) rep.ok("support", "n=" + std::to_string(support_max));

    all_ok = true;
    for (std::int64_t n = 1; n <= perm_max && all_ok; ++n) {
        BigInt sign_sum(0);
        for_each_contributing_permutation(divisor_poset(n),
                                          [&](const ContributingPermutation& cp) {
                                              sign_sum += cp.sign();
                                          });
        if (sign_sum != sieve.mertens(n)) {
            rep.fail("signsum", "n=" + std::to_string(n), sign_sum, sieve.mertens(n));
            all_ok = false;
        }
    }
    if (all_ok) rep.ok("signsum", "n=" + std::to_string(perm_max));

    const std::int64_t inv_max = std::min<std::int64_t>(max, 60);
    all_ok = true;
    for (std::int64_t n = 1; n <= inv_max && all_ok; ++n) {
        const Poset p = divisor_poset(n);
        if (sieve.mertens(n) == 0) {
            try {
                redheffer_inverse(p);
                rep.fail("inverse", "n=" + std::to_string(n) + " expected-singular");
                all_ok = false;
            } catch (const SingularError&) {
            }
        } else if (!check_inverse_consistency(p)) {
            rep.fail("inverse", "n=" + std::to_string(n));
            all_ok = false;
        }
    }
    if (all_ok) rep.ok("inverse", "n=" + std::to_string(inv_max));
}

inline void verify_poset_suite(std::int64_t cases, Reporter& rep) {
    std::mt19937_64 rng(20240923);
    bool perm_ok = true, det_ok = true, mu_ok = true, zeta_ok = true, inv_ok = true;
    for (std::int64_t c = 0; c < cases; ++c) {
        const std::size_t size = 2 + static_cast<std::size_t>(rng() % 11); // 2..12
        const Poset p = random_poset(rng, size);
        const std::string scope = "case=" + std::to_string(c) + " size=" + std::to_string(size);
        const RedhefferMatrix r = redheffer_general(p);

        const BigInt perm = permanent_ryser(r.matrix);
        const BigInt chains = count_chains_through_zero(p);
        if (perm_ok && perm != chains) {
            rep.fail("perm-chains", scope, perm, chains);
            perm_ok = false;
        }

        const BigInt det = det_bareiss(r.matrix);
        const BigInt det_mu = det_via_moebius(p);
        const BigInt det_chains = signed_chain_sum(p);
        if (det_ok && (det != det_mu || det != det_chains)) {
            rep.fail("det3", scope, det, det_mu.get_str() + "/" + det_chains.get_str());
            det_ok = false;
        }

        if (mu_ok) {
            for (std::size_t x = 0; x < p.size() && mu_ok; ++x) {
                if (x == p.zero()) continue;
                if (signed_chain_sum_by_max(p, x) != moebius(p, p.zero(), x)) {
                    rep.fail("chainmu", scope + " x=" + p.name(x));
                    mu_ok = false;
                }
            }
        }

        const MoebiusTable mu(p);
        if (zeta_ok && !is_identity(mat_mul(zeta_matrix(p), mu.as_int_matrix()))) {
            rep.fail("zetamu", scope);
            zeta_ok = false;
        }

        if (inv_ok && det != 0 && !check_inverse_consistency(p)) {
            rep.fail("inverse", scope);
            inv_ok = false;
        }
    }
    const std::string scope = "cases=" + std::to_string(cases);
    if (perm_ok) rep.ok("perm-chains", scope);
    if (det_ok) rep.ok("det3", scope);
    if (mu_ok) rep.ok("chainmu", scope);
    if (zeta_ok) rep.ok("zetamu", scope);
    if (inv_ok) rep.ok("inverse", scope);
}

inline void verify_boolean(std::int64_t max, Reporter& rep) {
    static const std::int64_t kChainCounts[] = {1, 2, 6, 26, 150, 1082};
    const int hi = static_cast<int>(std::min<std::int64_t>(max, 5));
    bool chains_ok = true, det_ok = true, detmat_ok = true, permmat_ok = true,
         singular_ok = true;
    for (int n = 0; n <= hi; ++n) {
        const Poset b = boolean_lattice(n);
        const BigInt chains = count_chains_through_zero(b);
        if (chains_ok && chains != kChainCounts[n]) {
            rep.fail("chains", "n=" + std::to_string(n), chains, kChainCounts[n]);
            chains_ok = false;
        }
        const BigInt det_mu = det_via_moebius(b);
        const BigInt expected = n == 0 ? 1 : 0;
        if (det_ok && det_mu != expected) {
            rep.fail("detmu", "n=" + std::to_string(n), det_mu, expected);
            det_ok = false;
        }
        if (n >= 1 && n <= 4) {
            const RedhefferMatrix r = redheffer_general(b);
            if (detmat_ok && det_bareiss(r.matrix) != 0) {
                rep.fail("detmatrix", "n=" + std::to_string(n));
                detmat_ok = false;
            }
            if (permmat_ok && permanent_ryser(r.matrix) != chains) {
                rep.fail("permmatrix", "n=" + std::to_string(n));
                permmat_ok = false;
            }
            if (singular_ok) {
                try {
                    redheffer_inverse(b);
                    rep.fail("singular", "n=" + std::to_string(n) + " expected-singular");
                    singular_ok = false;
                } catch (const SingularError&) {
                }
            }
        }
    }
    const std::string scope = "n=" + std::to_string(hi);
    const std::string matrix_scope = "n=" + std::to_string(std::min(hi, 4));
    if (chains_ok) rep.ok("chains", scope);
    if (det_ok) rep.ok("detmu", scope);
    if (detmat_ok) rep.ok("detmatrix", matrix_scope);
    if (permmat_ok) rep.ok("permmatrix", matrix_scope);
    if (singular_ok) rep.ok("singular", matrix_scope);
}

inline void verify_identities(std::int64_t max, Reporter& rep) {
    const std::int64_t det_max = std::min<std::int64_t>(max, kDetDimensionCap);
    MoebiusSieve sieve(std::max<std::int64_t>(det_max, 1));
    bool ok = true;
    for (std::int64_t n = 1; n <= det_max && ok; ++n)
        if (det_bareiss(redheffer_classic(n).matrix) != sieve.mertens(n)) {
            rep.fail("eq1", "n=" + std::to_string(n));
            ok = false;
        }
    if (ok) rep.ok("eq1", "n=" + std::to_string(det_max));

    const std::int64_t perm_max = std::min<std::int64_t>(max, kPermanentDimensionCap);
    const FactorCountTable table(std::max<std::int64_t>(perm_max, 1));
    ok = true;
    for (std::int64_t n = 1; n <= perm_max && ok; ++n) {
        const BigInt by_ryser = permanent_ryser(redheffer_classic(n).matrix);
        if (by_ryser != permanent_formula(table, n) ||
            by_ryser != count_chains_through_zero(divisor_poset(n))) {
            rep.fail("perm3", "n=" + std::to_string(n));
            ok = false;
        }
    }
    if (ok) rep.ok("perm3", "n=" + std::to_string(perm_max));

    const std::int64_t chain_n = std::min<std::int64_t>(std::max<std::int64_t>(max, 2), 60);
    const Poset divisors = divisor_poset(chain_n);
    ok = true;
    for (std::size_t x = 1; x < divisors.size() && ok; ++x)
        if (signed_chain_sum_by_max(divisors, x) != moebius(divisors, 0, x)) {
            rep.fail("chainmu", "x=" + divisors.name(x));
            ok = false;
        }
    if (ok) rep.ok("chainmu", "n=" + std::to_string(chain_n));

    const std::int64_t inv_max = std::min<std::int64_t>(max, 60);
    ok = true;
    for (std::int64_t n = 1; n <= inv_max && ok; ++n) {
        const Poset p = divisor_poset(n);
        if (sieve.mertens(n) == 0) {
            try {
                redheffer_inverse(p);
                rep.fail("inverse", "n=" + std::to_string(n) + " expected-singular");
                ok = false;
            } catch (const SingularError&) {
            }
        } else if (!check_inverse_consistency(p)) {
            rep.fail("inverse", "n=" + std::to_string(n));
            ok = false;
        }
    }
    if (ok) rep.ok("inverse", "n=" + std::to_string(inv_max));

    const std::int64_t fact_max = std::max<std::int64_t>(max, 2);
    const MoebiusSieve fact_sieve(fact_max);
    const auto signed_table = signed_factorization_table(fact_max);
    ok = true;
    for (std::int64_t r = 1; r <= fact_max && ok; ++r)
        if (signed_table[static_cast<std::size_t>(r)] != fact_sieve.moebius(r)) {
            rep.fail("signedfact", "r=" + std::to_string(r));
            ok = false;
        }
    if (ok) rep.ok("signedfact", "r=" + std::to_string(fact_max));
}

inline int run_poset_action(const Poset& p, bool det, bool perm, bool inverse, bool chains,
                            bool moebius_dump, std::ostream& out) {
    if (det) {
        out << det_via_moebius(p) << '\n';
    } else if (perm) {
        out << permanent_ryser(redheffer_general(p).matrix) << '\n';
    } else if (inverse) {
        out << to_tsv(redheffer_inverse(p));
    } else if (chains) {
        out << count_chains_through_zero(p) << '\n';
    } else if (moebius_dump) {
        out << to_tsv(moebius_table(p).as_int_matrix());
    }
    return 0;
}

inline std::string format_slope(double slope) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", slope);
    return buf;
}

} // namespace detail

/// Run the CLI on `args` (program name excluded). Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Redheffer matrices of the divisor order and of finite posets"};
    app.name("redheffer");
    app.require_subcommand(0, 1);

    auto* classic = app.add_subcommand("classic", "Classical n x n Redheffer matrix R_n");
    std::int64_t classic_n = 0;
    bool c_det = false, c_perm = false, c_dump = false, c_inv = false;
    classic->add_option("--n", classic_n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
    classic->add_flag("--det", c_det, "Print det R_n (= Mertens M(n))");
    classic->add_flag("--perm", c_perm, "Print perm R_n (ordered-factorization count sum)");
    classic->add_flag("--dump-matrix", c_dump, "Print R_n as TSV");
    classic->add_flag("--inverse", c_inv, "Print R_n^-1 as TSV of rationals");

    auto* poset_cmd = app.add_subcommand("poset", "Redheffer matrix of a poset from a JSON file");
    std::string poset_file;
    bool p_det = false, p_perm = false, p_inv = false, p_chains = false, p_mu = false;
    poset_cmd->add_option("--file", poset_file, "Poset JSON file")->required();
    poset_cmd->add_flag("--det", p_det, "Print det R(S) = sum_x mu(0,x)");
    poset_cmd->add_flag("--perm", p_perm, "Print perm R(S) by Ryser (size <= 24)");
    poset_cmd->add_flag("--inverse", p_inv, "Print R(S)^-1 as TSV of rationals");
    poset_cmd->add_flag("--chains", p_chains, "Print the number of chains through 0");
    poset_cmd->add_flag("--moebius", p_mu, "Print the Moebius table as TSV");

    auto* boolean_cmd = app.add_subcommand("boolean", "Boolean lattice B_n");
    std::int64_t boolean_n = 0;
    bool b_det = false, b_perm = false;
    boolean_cmd->add_option("--n", boolean_n, "Ground-set size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    boolean_cmd->add_flag("--det", b_det, "Print det R(B_n)");
    boolean_cmd->add_flag("--perm", b_perm, "Print the number of chains through the empty set");

    auto* sequence = app.add_subcommand("sequence", "Dump a sequence as TSV (n<TAB>value)");
    std::string seq_kind;
    std::int64_t seq_upto = 0;
    sequence->add_option("--kind", seq_kind, "permanent | mertens | factorizations")
        ->required()
        ->check(CLI::IsMember({"permanent", "mertens", "factorizations"}));
    sequence->add_option("--upto", seq_upto, "Last n")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Cross-check the matrix identities");
    std::string suite;
    std::int64_t verify_max = -1;
    verify->add_option("--suite", suite, "classic | poset | boolean | identities")
        ->required()
        ->check(CLI::IsMember({"classic", "poset", "boolean", "identities"}));
    verify->add_option("--max", verify_max,
                       "Range bound (classic/identities: max n; poset: number of "
                       "random posets; boolean: max lattice size)")
        ->check(CLI::PositiveNumber);

    auto* growth = app.add_subcommand("growth", "Log-log slope of the permanent sequence");
    std::int64_t growth_lo = 0, growth_hi = 0;
    growth->add_option("--lo", growth_lo, "Lower end of the fit range")
        ->required()
        ->check(CLI::PositiveNumber);
    growth->add_option("--hi", growth_hi, "Upper end of the fit range")
        ->required()
        ->check(CLI::PositiveNumber);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(classic)) {
            if (c_det + c_perm + c_dump + c_inv != 1) {
                err << "error: choose exactly one of --det, --perm, --dump-matrix, --inverse\n";
                return 2;
            }
            if (c_det) {
                out << det_via_moebius(divisor_poset(classic_n)) << '\n';
            } else if (c_perm) {
                out << permanent_formula(classic_n) << '\n';
            } else if (c_dump) {
                out << to_tsv(redheffer_classic(classic_n).matrix);
            } else {
                out << to_tsv(redheffer_inverse(divisor_poset(classic_n)));
            }
            return 0;
        }
        if (app.got_subcommand(poset_cmd)) {
            if (p_det + p_perm + p_inv + p_chains + p_mu != 1) {
                err << "error: choose exactly one of --det, --perm, --inverse, --chains, "
                       "--moebius\n";
                return 2;
            }
            const Poset p = load_poset_file(poset_file);
            return detail::run_poset_action(p, p_det, p_perm, p_inv, p_chains, p_mu, out);
        }
        if (app.got_subcommand(boolean_cmd)) {
            if (b_det + b_perm != 1) {
                err << "error: choose exactly one of --det, --perm\n";
                return 2;
            }
            const Poset b = boolean_lattice(boolean_n);
            if (b_det)
                out << det_via_moebius(b) << '\n';
            else
                out << count_chains_through_zero(b) << '\n';
            return 0;
        }
        if (app.got_subcommand(sequence)) {
            if (seq_kind == "mertens") {
                MoebiusSieve sieve(seq_upto);
                for (std::int64_t n = 1; n <= seq_upto; ++n)
                    out << n << '\t' << sieve.mertens(n) << '\n';
            } else {
                const FactorCountTable table(seq_upto);
                if (seq_kind == "factorizations") {
                    for (std::int64_t n = 1; n <= seq_upto; ++n)
                        out << n << '\t' << table.count(n) << '\n';
                } else {
                    BigInt running(0);
                    for (std::int64_t n = 1; n <= seq_upto; ++n) {
                        running += table.count_u64(n);
                        out << n << '\t' << running << '\n';
                    }
                }
            }
            return 0;
        }
        if (app.got_subcommand(verify)) {
            detail::Reporter rep(out);
            if (suite == "classic") {
                detail::verify_classic(verify_max < 0 ? 20 : verify_max, rep);
            } else if (suite == "poset") {
                detail::verify_poset_suite(verify_max < 0 ? 100 : verify_max, rep);
            } else if (suite == "boolean") {
                detail::verify_boolean(verify_max < 0 ? 5 : verify_max, rep);
            } else {
                detail::verify_identities(verify_max < 0 ? 20 : verify_max, rep);
            }
            return rep.failed() ? 1 : 0;
        }
        if (app.got_subcommand(growth)) {
            out << detail::format_slope(growth_exponent_estimate(growth_lo, growth_hi)) << '\n';
            return 0;
        }
        out << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace redheffer::cli
