// qinv: exact computations around quiver semi-invariants and orbit semigroups.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qinv/qinv.hpp"
#include "qinv/verify.hpp"

namespace {

using namespace qinv;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    std::string quiver_file;
    std::string rep_file;
    std::string fixture_name;

    QuiverPtr quiver() const {
        if (!quiver_file.empty()) {
            return std::make_shared<const Quiver>(Quiver::parse(read_file(quiver_file)));
        }
        if (!fixture_name.empty()) return fixture(fixture_name).quiver;
        throw ParseError("need --quiver FILE or --fixture NAME");
    }

    Representation rep(const QuiverPtr& q) const {
        if (!rep_file.empty()) return parse_representation(read_file(rep_file), q);
        if (!fixture_name.empty()) {
            WildFixture f = fixture(fixture_name);
            if (f.counterexample) return *f.counterexample;
        }
        throw ParseError("need --rep FILE (or a fixture that carries a representation)");
    }

    void attach(CLI::App* cmd, bool with_rep) {
        cmd->add_option("--quiver", quiver_file, "quiver file");
        cmd->add_option("--fixture", fixture_name, "built-in wild quiver fixture (kron3|b|c|d|e|f|g)");
        if (with_rep) cmd->add_option("--rep", rep_file, "representation file");
    }
};

MembershipMode parse_mode(const std::string& mode) {
    if (mode == "randomized") return MembershipMode::Randomized;
    if (mode == "symbolic") return MembershipMode::Symbolic;
    if (mode == "auto") return MembershipMode::Auto;
    throw ParseError("unknown mode '" + mode + "' (randomized|symbolic|auto)");
}

std::string verdict_line(const MembershipVerdict& v) {
    switch (v.status) {
        case MemberStatus::Member:
            return "Member (witness determinant = " + format_rational(v.witness_value) + ")";
        case MemberStatus::NotMember: {
            std::string reason;
            switch (*v.proof) {
                case NonMemberProof::ZeroSymbolicDeterminant:
                    reason = "zero polynomial";
                    break;
                case NonMemberProof::NegativeAlpha:
                    reason = "negative alpha entry";
                    break;
                case NonMemberProof::NonzeroPairing:
                    reason = "nonzero Euler pairing";
                    break;
            }
            return "NotMember (certified: " + reason + ")";
        }
        case MemberStatus::ProbablyNotMember:
            return "ProbablyNotMember (trials=" + std::to_string(v.trials_used) +
                   ", bound=" + std::to_string(v.bound_used) +
                   ", error <= " + format_rational(v.error_bound) + ")";
    }
    return "";
}

// member blocks: like certificates but for a single weight, no proof part
std::string format_member_block(const IntVec& sigma, const Representation& witness, const Rational& value) {
    std::string out = "member\n";
    out += "weight " + format_int_vector(sigma) + "\n";
    out += "witness-value " + format_rational(value) + "\n";
    out += "witness\n";
    out += format_representation(witness);
    out += "end\n";
    return out;
}

struct MemberRecord {
    IntVec sigma;
    Representation witness;
    Rational value;
};

std::vector<MemberRecord> parse_member_blocks(const std::string& text, const QuiverPtr& quiver) {
    std::vector<MemberRecord> out;
    const auto lines = split_on(text, '\n');
    std::size_t i = 0;
    while (i < lines.size()) {
        const auto head = split_ws(lines[i]);
        if (head.empty() || head[0] != "member") {
            ++i;
            continue;
        }
        ++i;
        IntVec sigma;
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
            } else if (tokens[0] == "weight" && tokens.size() == 2) {
                sigma = parse_int_vector(tokens[1]);
            } else if (tokens[0] == "witness-value" && tokens.size() == 2) {
                value = parse_rational(tokens[1]);
            } else if (tokens[0] == "witness") {
                in_witness = true;
            } else {
                throw ParseError("unexpected member-block line '" + lines[i] + "'");
            }
        }
        if (!done) throw ParseError("member block not terminated by 'end'");
        ++i;
        out.push_back({std::move(sigma), parse_representation(rep_text, quiver), std::move(value)});
    }
    return out;
}

bool verify_member_record(const Representation& w, const MemberRecord& rec, std::ostream& os) {
    RestrictedRepresentation restricted = restrict_to_support(w);
    IntVec sigma_sub, dim_sub;
    for (int orig : restricted.support.vertex_map) {
        sigma_sub.push_back(rec.sigma[static_cast<std::size_t>(orig)]);
        dim_sub.push_back(rec.witness.dim()[static_cast<std::size_t>(orig)]);
    }
    bool ok = true;
    if (weight_of_alpha(restricted.rep.quiver(), dim_sub) != sigma_sub) {
        os << "  witness dimension vector does not realize the weight\n";
        ok = false;
    }
    try {
        const Rational value = schofield_eval(rec.witness, w);
        if (value == 0) {
            os << "  witness determinant vanishes\n";
            ok = false;
        } else if (value != rec.value) {
            os << "  witness determinant differs from recorded value\n";
            ok = false;
        }
    } catch (const PreconditionError& e) {
        os << "  witness determinant undefined: " << e.what() << "\n";
        ok = false;
    }
    return ok;
}

IntVec parse_box(const std::string& text, int vertices) {
    IntVec box = parse_int_vector(text);
    if (box.size() == 1) box.assign(static_cast<std::size_t>(vertices), box[0]);
    return box;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quiver invariants: Euler forms, semi-invariants, orbit semigroups, saturation"};
    app.require_subcommand(1);

    // ---- classify ----
    Inputs classify_in;
    auto* cmd_classify = app.add_subcommand("classify", "representation type of a connected quiver");
    classify_in.attach(cmd_classify, false);

    // ---- homext ----
    Inputs homext_in;
    std::string homext_alpha, homext_beta, homext_rep2;
    long long homext_trials = 3, homext_bound = 1000000;
    std::uint64_t homext_seed = 1;
    auto* cmd_homext = app.add_subcommand("homext", "generic (or exact) hom and ext dimensions");
    homext_in.attach(cmd_homext, true);
    cmd_homext->add_option("--alpha", homext_alpha, "dimension vector alpha, e.g. 1,2");
    cmd_homext->add_option("--beta", homext_beta, "dimension vector beta");
    cmd_homext->add_option("--rep2", homext_rep2, "second representation file (exact mode)");
    cmd_homext->add_option("--trials", homext_trials, "sample count");
    cmd_homext->add_option("--bound", homext_bound, "entry bound");
    cmd_homext->add_option("--seed", homext_seed, "random seed");

    // ---- semiinv ----
    Inputs semiinv_in;
    std::string semiinv_alpha, semiinv_repv;
    bool semiinv_functional = false;
    std::uint64_t semiinv_seed = 1;
    long long semiinv_bound = 1000000;
    auto* cmd_semiinv = app.add_subcommand("semiinv", "Schofield semi-invariant values c(V,W)");
    semiinv_in.attach(cmd_semiinv, true);
    cmd_semiinv->add_option("--rep-v", semiinv_repv, "file with V (otherwise sampled from --alpha)");
    cmd_semiinv->add_option("--alpha", semiinv_alpha, "dimension vector of a random V");
    cmd_semiinv->add_flag("--functional", semiinv_functional,
                          "print the functional determinant polynomial of W instead");
    cmd_semiinv->add_option("--seed", semiinv_seed, "random seed");
    cmd_semiinv->add_option("--bound", semiinv_bound, "entry bound for the random V");

    // ---- orbit ----
    auto* cmd_orbit = app.add_subcommand("orbit", "orbit semigroup membership and saturation scans");
    cmd_orbit->require_subcommand(1);

    Inputs member_in;
    std::string member_weight, member_mode = "auto";
    long long member_trials = 8, member_bound = 1000000;
    std::uint64_t member_seed = 1;
    int member_symlimit = kDefaultSymbolicLimit;
    auto* cmd_member = cmd_orbit->add_subcommand("member", "decide one weight");
    member_in.attach(cmd_member, true);
    cmd_member->add_option("--weight", member_weight, "weight sigma, e.g. 1,-1")->required();
    cmd_member->add_option("--mode", member_mode, "randomized|symbolic|auto");
    cmd_member->add_option("--trials", member_trials, "randomized trials");
    cmd_member->add_option("--bound", member_bound, "entry bound for sampled witnesses");
    cmd_member->add_option("--seed", member_seed, "random seed");
    cmd_member->add_option("--symbolic-limit", member_symlimit, "max symbolic matrix size");

    Inputs scan_in;
    std::string scan_box, scan_mode = "auto";
    long long scan_nmax = 4, scan_trials = 8, scan_bound = 1000000;
    std::uint64_t scan_seed = 1;
    int scan_threads = 1, scan_symlimit = kDefaultSymbolicLimit;
    auto* cmd_scan = cmd_orbit->add_subcommand("scan", "scan a weight box for saturation certificates");
    scan_in.attach(cmd_scan, true);
    cmd_scan->add_option("--box", scan_box, "per-vertex bound(s), e.g. 2 or 2,3")->required();
    cmd_scan->add_option("--nmax", scan_nmax, "largest multiple tested");
    cmd_scan->add_option("--mode", scan_mode, "randomized|symbolic|auto");
    cmd_scan->add_option("--trials", scan_trials, "randomized trials per weight");
    cmd_scan->add_option("--bound", scan_bound, "entry bound for sampled witnesses");
    cmd_scan->add_option("--seed", scan_seed, "master seed");
    cmd_scan->add_option("--threads", scan_threads, "worker threads");
    cmd_scan->add_option("--symbolic-limit", scan_symlimit, "max symbolic matrix size");

    Inputs vc_in;
    std::string vc_cert;
    auto* cmd_vc = cmd_orbit->add_subcommand("verify-certificate", "re-verify certificate/member blocks");
    vc_in.attach(cmd_vc, true);
    cmd_vc->add_option("--cert", vc_cert, "file with certificate and member blocks")->required();

    // ---- reflect ----
    Inputs reflect_in;
    std::string reflect_vertex, reflect_alpha, reflect_dir = "plus";
    auto* cmd_reflect = app.add_subcommand("reflect", "reflection at a vertex (quiver, vector, functor)");
    reflect_in.attach(cmd_reflect, true);
    cmd_reflect->add_option("--vertex", reflect_vertex, "vertex name")->required();
    cmd_reflect->add_option("--alpha", reflect_alpha, "vector to reflect");
    cmd_reflect->add_option("--direction", reflect_dir, "plus (sink) | minus (source)");

    // ---- shrink ----
    Inputs shrink_in;
    std::string shrink_vertex, shrink_weight, shrink_beta;
    auto* cmd_shrink = app.add_subcommand("shrink", "contract a through-vertex to composed arrows");
    shrink_in.attach(cmd_shrink, true);
    cmd_shrink->add_option("--vertex", shrink_vertex, "vertex to remove")->required();
    cmd_shrink->add_option("--weight", shrink_weight, "weight sigma (sigma(v0) must be 0)");
    cmd_shrink->add_option("--beta", shrink_beta, "dimension vector when no --rep is given");

    // ---- exceptional ----
    Inputs exc_in;
    std::string exc_seq;
    int exc_step = -1;
    std::uint64_t exc_seed = 1;
    auto* cmd_exc = app.add_subcommand("exceptional", "validate an exceptional sequence, build Q(eps)");
    exc_in.attach(cmd_exc, false);
    cmd_exc->add_option("--seq", exc_seq, "semicolon-separated dimension vectors, e.g. '0,0,1;2,3,0'");
    cmd_exc->add_option("--step", exc_step, "fixture chain step (default: walk the whole chain)");
    cmd_exc->add_option("--seed", exc_seed, "random seed");

    // ---- candecomp ----
    Inputs cd_in;
    std::string cd_alpha;
    std::uint64_t cd_seed = 1;
    int cd_nseeds = 3;
    long long cd_bound = 1000;
    auto* cmd_cd = app.add_subcommand("candecomp", "canonical decomposition of a dimension vector");
    cd_in.attach(cmd_cd, false);
    cmd_cd->add_option("--alpha", cd_alpha, "dimension vector")->required();
    cmd_cd->add_option("--seed", cd_seed, "master seed");
    cmd_cd->add_option("--nseeds", cd_nseeds, "number of independent seeds");
    cmd_cd->add_option("--bound", cd_bound, "sample entry bound");

    // ---- thin ----
    auto* cmd_thin = app.add_subcommand("thin", "thin representations: flows, fibers, saturation");
    cmd_thin->require_subcommand(1);
    Inputs thin_member_in;
    std::string thin_member_weight;
    auto* cmd_thin_member = cmd_thin->add_subcommand("member", "flow-based membership");
    thin_member_in.attach(cmd_thin_member, true);
    cmd_thin_member->add_option("--weight", thin_member_weight, "weight sigma")->required();

    Inputs thin_count_in;
    std::string thin_count_weight;
    auto* cmd_thin_count = cmd_thin->add_subcommand("count", "lattice fiber size of the boundary map");
    thin_count_in.attach(cmd_thin_count, false);
    cmd_thin_count->add_option("--weight", thin_count_weight, "weight sigma")->required();

    Inputs thin_sat_in;
    std::string thin_sat_box;
    long long thin_sat_nmax = 4;
    auto* cmd_thin_sat = cmd_thin->add_subcommand("saturation", "saturation check over a weight box");
    thin_sat_in.attach(cmd_thin_sat, true);
    cmd_thin_sat->add_option("--box", thin_sat_box, "per-vertex bound(s)")->required();
    cmd_thin_sat->add_option("--nmax", thin_sat_nmax, "largest multiple tested");

    // ---- verify-paper ----
    std::string vp_only;
    int vp_threads = 2;
    std::uint64_t vp_seed = 2026;
    auto* cmd_vp = app.add_subcommand("verify-paper", "run the acceptance suite");
    cmd_vp->add_option("--only", vp_only, "run a single item (theta3|zwara|tame|euler|reflection|candecomp|exceptional|thin|shrink)");
    cmd_vp->add_option("--threads", vp_threads, "worker threads for scans");
    cmd_vp->add_option("--seed", vp_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_classify) {
            std::cout << classify_quiver(*classify_in.quiver()).to_string() << "\n";
        } else if (*cmd_homext) {
            QuiverPtr q = homext_in.quiver();
            if (!homext_in.rep_file.empty() && !homext_rep2.empty()) {
                Representation v = parse_representation(read_file(homext_in.rep_file), q);
                Representation w = parse_representation(read_file(homext_rep2), q);
                HomExt he = hom_ext(v, w);
                std::cout << "hom " << he.hom << " ext " << he.ext << "\n";
            } else {
                if (homext_alpha.empty() || homext_beta.empty()) {
                    throw ParseError("need --alpha and --beta (or --rep and --rep2)");
                }
                GenericHomExtOptions opts;
                opts.trials = static_cast<int>(homext_trials);
                opts.bound = homext_bound;
                HomExt he = generic_hom_ext(*q, parse_int_vector(homext_alpha),
                                            parse_int_vector(homext_beta), homext_seed, opts);
                std::cout << "hom " << he.hom << " ext " << he.ext << "\n";
            }
        } else if (*cmd_semiinv) {
            QuiverPtr q = semiinv_in.quiver();
            Representation w = semiinv_in.rep(q);
            if (semiinv_functional) {
                std::cout << functional_determinant(w).to_string() << "\n";
            } else if (!semiinv_repv.empty()) {
                Representation v = parse_representation(read_file(semiinv_repv), q);
                std::cout << format_rational(schofield_eval(v, w)) << "\n";
            } else if (!semiinv_alpha.empty()) {
                Representation v =
                    random_representation(q, parse_int_vector(semiinv_alpha), semiinv_seed, semiinv_bound);
                std::cout << format_rational(schofield_eval(v, w)) << "\n";
            } else {
                throw ParseError("need --rep-v, --alpha, or --functional");
            }
        } else if (*cmd_member) {
            QuiverPtr q = member_in.quiver();
            Representation w = member_in.rep(q);
            MembershipOptions mo;
            mo.mode = parse_mode(member_mode);
            mo.trials = member_trials;
            mo.bound = member_bound;
            mo.seed = member_seed;
            mo.symbolic_limit = member_symlimit;
            IntVec sigma = parse_int_vector(member_weight);
            MembershipVerdict v = membership(w, sigma, mo);
            std::cout << verdict_line(v) << "\n";
            for (const auto& note : v.notes) std::cout << "note: " << note << "\n";
            if (v.status == MemberStatus::Member && !v.witness->is_zero_dimensional()) {
                std::cout << format_member_block(sigma, *v.witness, v.witness_value);
            }
        } else if (*cmd_scan) {
            QuiverPtr q = scan_in.quiver();
            Representation w = scan_in.rep(q);
            ScanOptions so;
            so.box = parse_box(scan_box, q->vertex_count());
            so.n_max = scan_nmax;
            so.base.mode = parse_mode(scan_mode);
            so.base.trials = scan_trials;
            so.base.bound = scan_bound;
            so.base.seed = scan_seed;
            so.base.symbolic_limit = scan_symlimit;
            so.threads = scan_threads;
            ScanResult result = saturation_scan(w, so);
            std::cout << "weights " << result.stats.weights << ", members " << result.stats.members
                      << ", certified non-members " << result.stats.symbolic_zero << " (negative-alpha "
                      << result.stats.negative_alpha << ", nonzero-pairing " << result.stats.nonzero_pairing
                      << "), probabilistic " << result.stats.probable_not << ", symbolic skipped "
                      << result.stats.symbolic_skipped << "\n";
            std::cout << "certificates " << result.certificates.size() << "\n";
            for (const auto& c : result.certificates) std::cout << format_certificate(c);
            if (!result.certificates.empty()) return kExitOk;
        } else if (*cmd_vc) {
            QuiverPtr q = vc_in.quiver();
            Representation w = vc_in.rep(q);
            const std::string text = read_file(vc_cert);
            bool all_ok = true;
            int count = 0;
            for (const auto& cert : parse_certificates(text, q)) {
                ++count;
                CertificateCheck check = verify_certificate(w, cert);
                std::cout << "certificate weight=" << format_int_vector(cert.sigma)
                          << " multiple=" << cert.multiple << ": " << (check.ok ? "verified" : "FAILED")
                          << "\n";
                for (const auto& msg : check.messages) std::cout << "  " << msg << "\n";
                all_ok = all_ok && check.ok;
            }
            for (const auto& rec : parse_member_blocks(text, q)) {
                ++count;
                const bool ok = verify_member_record(w, rec, std::cout);
                std::cout << "member weight=" << format_int_vector(rec.sigma) << ": "
                          << (ok ? "verified" : "FAILED") << "\n";
                all_ok = all_ok && ok;
            }
            if (count == 0) {
                std::cout << "no certificate or member blocks found\n";
                return kExitUsage;
            }
            if (!all_ok) return kExitVerificationFailed;
        } else if (*cmd_reflect) {
            QuiverPtr q = reflect_in.quiver();
            const int x = q->vertex_index(reflect_vertex);
            std::cout << reflect_quiver(*q, x).to_text();
            if (!reflect_alpha.empty()) {
                std::cout << "vector " << format_int_vector(reflect_vector(*q, x, parse_int_vector(reflect_alpha)))
                          << "\n";
            }
            if (!reflect_in.rep_file.empty()) {
                Representation v = reflect_in.rep(q);
                Representation r = reflect_rep(
                    v, x, reflect_dir == "minus" ? ReflectDir::Minus : ReflectDir::Plus);
                std::cout << format_representation(r);
            }
        } else if (*cmd_shrink) {
            QuiverPtr q = shrink_in.quiver();
            const int v0 = q->vertex_index(shrink_vertex);
            std::optional<Representation> w;
            if (!shrink_in.rep_file.empty()) w = shrink_in.rep(q);
            std::optional<IntVec> sigma;
            if (!shrink_weight.empty()) sigma = parse_int_vector(shrink_weight);
            std::optional<IntVec> beta;
            if (!shrink_beta.empty()) beta = parse_int_vector(shrink_beta);
            ShrinkResult sh = shrink(*q, v0, w, sigma, beta);
            std::cout << sh.quiver.to_text();
            if (sh.beta) std::cout << "beta " << format_int_vector(*sh.beta) << "\n";
            if (sh.sigma) std::cout << "weight " << format_int_vector(*sh.sigma) << "\n";
            if (sh.rep) std::cout << format_representation(*sh.rep);
        } else if (*cmd_exc) {
            std::uint64_t seed = exc_seed;
            auto run_one = [&](const Quiver& q, const std::vector<IntVec>& eps) -> std::optional<Quiver> {
                SequenceValidation val = validate_exceptional_sequence(q, eps, seed);
                for (std::size_t i = 0; i < val.items.size(); ++i) {
                    const auto& it = val.items[i];
                    std::cout << "eps" << (i + 1) << " = " << format_int_vector(it.eps)
                              << ": euler-self-one=" << (it.euler_self_one ? "yes" : "no")
                              << " schur=" << (it.schur ? "yes" : "no") << "\n";
                }
                for (const auto& pc : val.pairs) {
                    std::cout << "pair (" << (pc.i + 1) << "," << (pc.j + 1)
                              << "): orthogonal=" << (pc.orthogonal ? "yes" : "no")
                              << " backward-euler=" << pc.backward_euler << "\n";
                }
                std::cout << (val.valid ? "valid" : "invalid") << "\n";
                if (val.valid) {
                    std::cout << "derived quiver:\n" << val.derived->to_text();
                    return *val.derived;
                }
                return std::nullopt;
            };
            if (!exc_in.fixture_name.empty() && exc_seq.empty()) {
                WildFixture f = fixture(exc_in.fixture_name);
                QuiverPtr current = f.quiver;
                for (std::size_t step = 0; step < f.chain.size(); ++step) {
                    if (exc_step >= 0 && static_cast<std::size_t>(exc_step) != step) continue;
                    std::cout << "-- chain step " << step << " --\n";
                    auto derived = run_one(*current, f.chain[step]);
                    if (!derived) return kExitVerificationFailed;
                    current = std::make_shared<const Quiver>(*derived);
                }
            } else {
                if (exc_seq.empty()) throw ParseError("need --seq or --fixture");
                std::vector<IntVec> eps;
                for (const auto& part : split_on(exc_seq, ';')) eps.push_back(parse_int_vector(part));
                if (!run_one(*exc_in.quiver(), eps)) return kExitVerificationFailed;
            }
        } else if (*cmd_cd) {
            QuiverPtr q = cd_in.quiver();
            std::vector<std::uint64_t> seeds;
            for (int i = 0; i < cd_nseeds; ++i) seeds.push_back(derive_seed(cd_seed, {0xcd11, i}));
            CanonicalOptions opts;
            opts.sample_bound = cd_bound;
            CanonicalDecomposition cd = canonical_decomposition(q, parse_int_vector(cd_alpha), seeds, opts);
            for (const auto& p : cd.parts) {
                std::cout << format_int_vector(p.dim) << " x" << p.multiplicity << " " << to_string(p.cls)
                          << (p.schur_ok ? "" : " [Schur check failed]") << "\n";
            }
            std::cout << (cd.stable ? "stable across seeds" : "UNSTABLE across seeds") << "\n";
            for (const auto& n : cd.notes) std::cout << "note: " << n << "\n";
            if (!cd.stable) return kExitVerificationFailed;
        } else if (*cmd_thin_member) {
            QuiverPtr q = thin_member_in.quiver();
            Representation w = thin_member_in.rep(q);
            ThinVerdict v = thin_membership(w, parse_int_vector(thin_member_weight));
            if (v.status == MemberStatus::Member) {
                std::cout << "Member (flow " << format_int_vector(*v.flow) << ", monomial "
                          << v.monomial->to_string() << ", value " << format_rational(v.value) << ")\n";
            } else {
                std::cout << "NotMember (certified: " << v.reason << ")\n";
            }
        } else if (*cmd_thin_count) {
            QuiverPtr q = thin_count_in.quiver();
            std::cout << fiber_count(*q, parse_int_vector(thin_count_weight)) << "\n";
        } else if (*cmd_thin_sat) {
            QuiverPtr q = thin_sat_in.quiver();
            Representation w = thin_sat_in.rep(q);
            ThinSaturationReport rep =
                thin_saturation_check(w, parse_box(thin_sat_box, q->vertex_count()), thin_sat_nmax);
            std::cout << "weights checked " << rep.weights_checked << ", violations "
                      << rep.violations.size() << "\n";
            for (const auto& viol : rep.violations) {
                std::cout << "violation: weight " << format_int_vector(viol.sigma) << " at multiple "
                          << viol.multiple << "\n";
            }
            if (!rep.violations.empty()) return kExitVerificationFailed;
        } else if (*cmd_vp) {
            qinv::verify::Config cfg;
            cfg.threads = vp_threads;
            cfg.seed = vp_seed;
            if (!vp_only.empty()) {
                bool known = false;
                for (const auto& id : qinv::verify::item_ids()) known = known || id == vp_only;
                if (!known) throw ParseError("unknown item '" + vp_only + "'");
            }
            if (!qinv::verify::run_acceptance(std::cout, cfg, vp_only)) return kExitVerificationFailed;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}
