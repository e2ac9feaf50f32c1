#pragma once

#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qinv/representation.hpp"

namespace qinv {

enum class MemberStatus { Member, NotMember, ProbablyNotMember };

enum class NonMemberProof { NegativeAlpha, NonzeroPairing, ZeroSymbolicDeterminant };

inline std::string to_string(MemberStatus s) {
    switch (s) {
        case MemberStatus::Member:
            return "Member";
        case MemberStatus::NotMember:
            return "NotMember";
        case MemberStatus::ProbablyNotMember:
            return "ProbablyNotMember";
    }
    return "";
}

inline std::string to_string(NonMemberProof p) {
    switch (p) {
        case NonMemberProof::NegativeAlpha:
            return "negative-alpha";
        case NonMemberProof::NonzeroPairing:
            return "nonzero-pairing";
        case NonMemberProof::ZeroSymbolicDeterminant:
            return "zero-symbolic-determinant";
    }
    return "";
}

inline std::optional<NonMemberProof> parse_proof_tag(const std::string& s) {
    if (s == "negative-alpha") return NonMemberProof::NegativeAlpha;
    if (s == "nonzero-pairing") return NonMemberProof::NonzeroPairing;
    if (s == "zero-symbolic-determinant") return NonMemberProof::ZeroSymbolicDeterminant;
    return std::nullopt;
}

enum class MembershipMode { Randomized, Symbolic, Auto };

struct MembershipOptions {
    MembershipMode mode = MembershipMode::Auto;
    long long trials = 8;
    long long bound = 1000000;
    std::uint64_t seed = 1;
    int symbolic_limit = kDefaultSymbolicLimit;
    // when the symbolic matrix exceeds the limit: fall back to the randomized
    // verdict with an explicit notice instead of refusing
    bool allow_fallback = true;
};

struct MembershipVerdict {
    MemberStatus status = MemberStatus::ProbablyNotMember;
    std::optional<Representation> witness;  // over the full quiver, zero off supp(W)
    Rational witness_value;                 // det of the interaction matrix, nonzero
    std::optional<NonMemberProof> proof;
    long long matrix_size = 0;
    long long trials_used = 0;
    long long bound_used = 0;
    Rational error_bound;  // Schwartz-Zippel bound for ProbablyNotMember
    IntVec support_alpha;  // alpha' on the support subquiver
    bool symbolic_skipped = false;
    std::vector<std::string> notes;
};

// sigma is in S(W) iff its restriction to supp(W) is in S(W'); weights are
// unconstrained off the support. On the support subquiver, alpha' must be a
// dimension vector pairing to zero against dim W', and then membership is
// equivalent to some alpha'-dimensional V being orthogonal to W'. Randomized
// mode searches for a witness V with nonzero c(V,W'); symbolic mode computes
// c(.,W') with indeterminate V-entries, so a vanishing determinant is a proof
// of non-membership over any field extension.
inline MembershipVerdict membership(const Representation& w, const IntVec& sigma,
                                    const MembershipOptions& opts = {}) {
    check_sized(w.quiver(), sigma, "weight");
    MembershipVerdict verdict;
    verdict.bound_used = opts.bound;

    RestrictedRepresentation restricted = restrict_to_support(w);
    const Quiver& sub = restricted.rep.quiver();
    IntVec sigma_sub;
    for (int orig : restricted.support.vertex_map) sigma_sub.push_back(sigma[static_cast<std::size_t>(orig)]);

    if (sub.vertex_count() == 0) {
        verdict.status = MemberStatus::Member;
        verdict.witness = Representation::zero(w.quiver_ptr(), IntVec(sigma.size(), 0));
        verdict.witness_value = 1;
        verdict.notes.push_back("empty support: every weight is a member");
        return verdict;
    }

    const IntVec alpha = alpha_of_weight(sub, sigma_sub);
    verdict.support_alpha = alpha;
    for (long long v : alpha) {
        if (v < 0) {
            verdict.status = MemberStatus::NotMember;
            verdict.proof = NonMemberProof::NegativeAlpha;
            return verdict;
        }
    }
    const long long pairing = euler_form(sub, alpha, restricted.rep.dim());
    if (pairing != 0) {
        verdict.status = MemberStatus::NotMember;
        verdict.proof = NonMemberProof::NonzeroPairing;
        verdict.notes.push_back("Euler pairing with dim W is " + std::to_string(pairing));
        return verdict;
    }
    long long size = 0;
    for (int x = 0; x < sub.vertex_count(); ++x) {
        size += alpha[static_cast<std::size_t>(x)] * restricted.rep.dim()[static_cast<std::size_t>(x)];
    }
    verdict.matrix_size = size;

    auto member_with = [&](Representation witness_sub, Rational value) {
        verdict.status = MemberStatus::Member;
        verdict.witness = embed_from_support(witness_sub, w.quiver_ptr(), restricted.support);
        verdict.witness_value = std::move(value);
        return verdict;
    };

    auto run_randomized = [&]() -> bool {  // true when a witness was found
        for (long long t = 0; t < opts.trials; ++t) {
            ++verdict.trials_used;
            Representation v = random_representation(restricted.rep.quiver_ptr(), alpha,
                                                     derive_seed(opts.seed, {t}), opts.bound);
            Rational value = schofield_eval(v, restricted.rep);
            if (value != 0) {
                member_with(std::move(v), std::move(value));
                return true;
            }
        }
        verdict.status = MemberStatus::ProbablyNotMember;
        Rational per_trial = Rational(size, 2 * opts.bound + 1);
        Rational bound(1);
        for (long long t = 0; t < opts.trials; ++t) bound *= per_trial;
        verdict.error_bound = bound;
        return false;
    };

    auto run_symbolic = [&]() {
        SymbolicInteraction sym = symbolic_interaction_matrix(alpha, restricted.rep);
        SparsePolynomial det = symbolic_determinant(sym.matrix, opts.symbolic_limit);
        if (det.is_zero()) {
            verdict.status = MemberStatus::NotMember;
            verdict.proof = NonMemberProof::ZeroSymbolicDeterminant;
            return;
        }
        // nonzero polynomial: locate a witness by evaluation
        long long bound = 3;
        for (int attempt = 0;; ++attempt, bound *= 3) {
            Rng rng(derive_seed(opts.seed, {0x3b, attempt}));
            std::vector<Rational> point(det.vars() ? det.vars()->size() : 0);
            for (auto& c : point) c = Rational(rng.uniform(-bound, bound));
            if (det.eval(point) != 0) {
                Representation v = sym.instantiate(restricted.rep.quiver_ptr(), point);
                Rational value = schofield_eval(v, restricted.rep);
                member_with(std::move(v), std::move(value));
                return;
            }
        }
    };

    switch (opts.mode) {
        case MembershipMode::Randomized:
            run_randomized();
            break;
        case MembershipMode::Symbolic:
            if (size > opts.symbolic_limit) {
                if (!opts.allow_fallback) throw PreconditionError("symbolic limit exceeded");
                verdict.symbolic_skipped = true;
                verdict.notes.push_back("symbolic limit exceeded (size " + std::to_string(size) +
                                        " > " + std::to_string(opts.symbolic_limit) +
                                        "); randomized fallback");
                run_randomized();
            } else {
                run_symbolic();
            }
            break;
        case MembershipMode::Auto:
            if (run_randomized()) break;
            if (size <= opts.symbolic_limit) {
                run_symbolic();
            } else {
                verdict.symbolic_skipped = true;
                verdict.notes.push_back("symbolic limit exceeded (size " + std::to_string(size) +
                                        " > " + std::to_string(opts.symbolic_limit) +
                                        "); verdict stays probabilistic");
            }
            break;
    }
    return verdict;
}

// --- saturation certificates -------------------------------------------------

struct SaturationCertificate {
    IntVec sigma;
    long long multiple = 0;
    Representation witness;  // for multiple * sigma
    Rational witness_value;
    NonMemberProof proof;  // certified proof that sigma itself is not a member
};

struct ScanStats {
    long long weights = 0;
    long long members = 0;
    long long negative_alpha = 0;
    long long nonzero_pairing = 0;
    long long symbolic_zero = 0;
    long long probable_not = 0;
    long long symbolic_skipped = 0;
};

struct ScanResult {
    std::vector<SaturationCertificate> certificates;
    ScanStats stats;
};

struct ScanOptions {
    IntVec box;              // per-vertex bound b(x) >= 0: sigma(x) in [-b(x), b(x)]
    long long n_max = 4;
    MembershipOptions base;  // base.seed is the master seed
    int threads = 1;
};

// Enumerate the weight box in lexicographic order; for every weight with a
// certified non-membership proof, test its multiples n = 2..n_max for a
// verifiable member witness. Proofs that scale linearly with n (negative
// alpha, nonzero pairing) rule out all multiples at once, so only weights
// killed by a vanishing symbolic determinant are retested.
inline ScanResult saturation_scan(const Representation& w, const ScanOptions& opts) {
    check_sized(w.quiver(), opts.box, "weight box");
    if (opts.n_max < 2) throw PreconditionError("n_max must be >= 2");
    const int n = w.quiver().vertex_count();
    long long total = 1;
    for (long long b : opts.box) {
        if (b < 0) throw PreconditionError("negative box bound");
        total *= 2 * b + 1;
    }

    auto sigma_at = [&](long long index) {
        IntVec sigma(static_cast<std::size_t>(n));
        for (int x = n - 1; x >= 0; --x) {
            const long long width = 2 * opts.box[static_cast<std::size_t>(x)] + 1;
            sigma[static_cast<std::size_t>(x)] =
                index % width - opts.box[static_cast<std::size_t>(x)];
            index /= width;
        }
        return sigma;
    };

    std::vector<std::optional<SaturationCertificate>> found(static_cast<std::size_t>(total));
    const int thread_count = std::max(1, opts.threads);
    std::vector<ScanStats> stats(static_cast<std::size_t>(thread_count));

    auto worker = [&](int tid) {
        ScanStats& st = stats[static_cast<std::size_t>(tid)];
        for (long long i = tid; i < total; i += thread_count) {
            IntVec sigma = sigma_at(i);
            ++st.weights;
            MembershipOptions mo = opts.base;
            std::vector<long long> tags(sigma.begin(), sigma.end());
            tags.push_back(1);
            mo.seed = derive_seed(opts.base.seed, tags);
            MembershipVerdict v = membership(w, sigma, mo);
            if (v.symbolic_skipped) ++st.symbolic_skipped;
            switch (v.status) {
                case MemberStatus::Member:
                    ++st.members;
                    continue;
                case MemberStatus::ProbablyNotMember:
                    ++st.probable_not;
                    continue;
                case MemberStatus::NotMember:
                    break;
            }
            switch (*v.proof) {
                case NonMemberProof::NegativeAlpha:
                    ++st.negative_alpha;
                    continue;  // alpha(n*sigma) = n*alpha(sigma) stays negative
                case NonMemberProof::NonzeroPairing:
                    ++st.nonzero_pairing;
                    continue;  // pairing scales by n, never returns to zero
                case NonMemberProof::ZeroSymbolicDeterminant:
                    ++st.symbolic_zero;
                    break;
            }
            for (long long mult = 2; mult <= opts.n_max; ++mult) {
                IntVec scaled(sigma);
                for (auto& s : scaled) s *= mult;
                MembershipOptions mo2 = opts.base;
                mo2.mode = MembershipMode::Randomized;
                std::vector<long long> tags2(sigma.begin(), sigma.end());
                tags2.push_back(mult);
                mo2.seed = derive_seed(opts.base.seed, tags2);
                MembershipVerdict v2 = membership(w, scaled, mo2);
                if (v2.status == MemberStatus::Member) {
                    found[static_cast<std::size_t>(i)] =
                        SaturationCertificate{sigma, mult, *v2.witness, v2.witness_value, *v.proof};
                    break;
                }
            }
        }
    };

    if (thread_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    ScanResult result;
    for (const auto& st : stats) {
        result.stats.weights += st.weights;
        result.stats.members += st.members;
        result.stats.negative_alpha += st.negative_alpha;
        result.stats.nonzero_pairing += st.nonzero_pairing;
        result.stats.symbolic_zero += st.symbolic_zero;
        result.stats.probable_not += st.probable_not;
        result.stats.symbolic_skipped += st.symbolic_skipped;
    }
    for (auto& c : found) {
        if (c) result.certificates.push_back(std::move(*c));
    }
    return result;
}

// --- certificate text blocks ---------------------------------------------------
//
//   certificate
//   weight 1,-1
//   multiple 2
//   proof zero-symbolic-determinant
//   witness-value 12/5
//   witness
//   rep - dim 2,4
//   m a
//   ...
//   end

inline std::string format_certificate(const SaturationCertificate& c) {
    std::string out = "certificate\n";
    out += "weight " + format_int_vector(c.sigma) + "\n";
    out += "multiple " + std::to_string(c.multiple) + "\n";
    out += "proof " + to_string(c.proof) + "\n";
    out += "witness-value " + format_rational(c.witness_value) + "\n";
    out += "witness\n";
    out += format_representation(c.witness);
    out += "end\n";
    return out;
}

inline std::vector<SaturationCertificate> parse_certificates(const std::string& text, const QuiverPtr& quiver) {
    std::vector<SaturationCertificate> out;
    const auto lines = split_on(text, '\n');
    std::size_t i = 0;
    while (i < lines.size()) {
        if (split_ws(lines[i]).empty() || split_ws(lines[i])[0] != "certificate") {
            ++i;
            continue;
        }
        ++i;
        IntVec sigma;
        long long multiple = 0;
        std::optional<NonMemberProof> proof;
        Rational value;
        std::string rep_text;
        bool in_witness = false, done = false;
        for (; i < lines.size() && !done; ++i) {
            const auto tokens = split_ws(lines[i]);
            if (tokens.empty()) continue;
            if (tokens[0] == "end") {
                done = true;
                break;
            }
            if (in_witness) {
                rep_text += lines[i] + "\n";
                continue;
            }
            if (tokens[0] == "weight" && tokens.size() == 2) {
                sigma = parse_int_vector(tokens[1]);
            } else if (tokens[0] == "multiple" && tokens.size() == 2) {
                multiple = parse_ll(tokens[1]);
            } else if (tokens[0] == "proof" && tokens.size() == 2) {
                proof = parse_proof_tag(tokens[1]);
                if (!proof) throw ParseError("unknown proof tag '" + tokens[1] + "'");
            } else if (tokens[0] == "witness-value" && tokens.size() == 2) {
                value = parse_rational(tokens[1]);
            } else if (tokens[0] == "witness") {
                in_witness = true;
            } else {
                throw ParseError("unexpected certificate line '" + lines[i] + "'");
            }
        }
        if (!done) throw ParseError("certificate block not terminated by 'end'");
        ++i;
        if (sigma.empty() || multiple < 2 || !proof) throw ParseError("incomplete certificate block");
        out.push_back({std::move(sigma), multiple, parse_representation(rep_text, quiver), value, *proof});
    }
    return out;
}

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> messages;
};

// Re-verify a certificate from first principles: the witness must evaluate to
// a nonzero determinant against W, its dimension vector must realize the
// scaled weight on supp(W), and the recorded non-membership proof for the
// base weight must re-certify.
inline CertificateCheck verify_certificate(const Representation& w, const SaturationCertificate& cert,
                                           int symbolic_limit = kDefaultSymbolicLimit) {
    CertificateCheck check;
    check.ok = true;
    auto fail = [&](const std::string& msg) {
        check.ok = false;
        check.messages.push_back(msg);
    };

    RestrictedRepresentation restricted = restrict_to_support(w);
    const Quiver& sub = restricted.rep.quiver();
    IntVec sigma_sub, witness_dim_sub;
    for (int orig : restricted.support.vertex_map) {
        sigma_sub.push_back(cert.sigma[static_cast<std::size_t>(orig)]);
        witness_dim_sub.push_back(cert.witness.dim()[static_cast<std::size_t>(orig)]);
    }
    // witness realizes multiple * sigma on the support
    IntVec scaled(sigma_sub);
    for (auto& s : scaled) s *= cert.multiple;
    if (weight_of_alpha(sub, witness_dim_sub) != scaled) {
        fail("witness dimension vector does not realize the scaled weight on supp(W)");
    }
    for (int x = 0; x < w.quiver().vertex_count(); ++x) {
        if (w.dim()[static_cast<std::size_t>(x)] == 0 &&
            cert.witness.dim()[static_cast<std::size_t>(x)] != 0) {
            fail("witness is nonzero off the support of W");
        }
    }
    try {
        const Rational value = schofield_eval(cert.witness, w);
        if (value == 0) {
            fail("witness determinant vanishes");
        } else if (value != cert.witness_value) {
            fail("witness determinant differs from the recorded value");
        } else {
            check.messages.push_back("witness determinant = " + format_rational(value) + " (nonzero)");
        }
    } catch (const PreconditionError& e) {
        fail(std::string("witness determinant undefined: ") + e.what());
    }

    // re-certify the base weight's proof
    const IntVec alpha = alpha_of_weight(sub, sigma_sub);
    switch (cert.proof) {
        case NonMemberProof::NegativeAlpha: {
            bool neg = false;
            for (long long v : alpha) neg = neg || v < 0;
            if (!neg) fail("negative-alpha proof does not re-certify");
            break;
        }
        case NonMemberProof::NonzeroPairing: {
            if (euler_form(sub, alpha, restricted.rep.dim()) == 0) {
                fail("nonzero-pairing proof does not re-certify");
            }
            break;
        }
        case NonMemberProof::ZeroSymbolicDeterminant: {
            bool neg = false;
            for (long long v : alpha) neg = neg || v < 0;
            if (neg || euler_form(sub, alpha, restricted.rep.dim()) != 0) {
                fail("base weight fails the dimension-vector gates, proof tag inconsistent");
                break;
            }
            try {
                SymbolicInteraction sym = symbolic_interaction_matrix(alpha, restricted.rep);
                if (!symbolic_determinant(sym.matrix, symbolic_limit).is_zero()) {
                    fail("symbolic determinant is not identically zero");
                } else {
                    check.messages.push_back("symbolic determinant re-verified identically zero");
                }
            } catch (const PreconditionError& e) {
                fail(std::string("symbolic re-check impossible: ") + e.what());
            }
            break;
        }
    }
    return check;
}

}  // namespace qinv
