#include "mal/reports.hpp"

#include <sstream>

#include "mal/errors.hpp"

namespace mal {

namespace {

std::string table_to_string(const BigradedBettiTable& t) {
    std::ostringstream os;
    for (const auto& [d, v] : t.b) {
        if (v == 0) continue;
        os << "b(" << d.q << "," << 2 * d.p << ")=" << v << " ";
    }
    return os.str();
}

std::string ints_to_string(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

Check compare(const std::string& name, const std::string& citation, const std::string& lhs,
              const std::string& rhs) {
    return Check{name, lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail, lhs, rhs, citation};
}

Check skipped(const std::string& name, const std::string& citation, const std::string& why) {
    return Check{name, CheckStatus::Skipped, why, "", citation};
}

}  // namespace

VerificationReport verify_identities(const SimplicialComplex& K, const ManifoldStatus& status,
                                     const Attestation& attest, const MomentAngleCaps& caps,
                                     int jobs) {
    VerificationReport rep;
    const int m = K.m();
    const int n = K.n();
    const HVector h = K.h_vector();

    // (a) direct vs closed generating polynomials, all three spaces.
    for (Space s : {Space::Zk, Space::ZkRelTorus, Space::Wk}) {
        const std::string name = "euler-poly-" + space_name(s);
        const std::string cite = "generating polynomial of " + space_name(s);
        const int cap = (s == Space::Wk) ? caps.max_m_wk : caps.max_m_zk;
        if (m > cap) {
            rep.checks.push_back(skipped(name, cite, "m exceeds cap " + std::to_string(cap)));
            continue;
        }
        rep.checks.push_back(compare(name, cite, euler_poly_direct(s, K, caps).to_string(),
                                     euler_poly_closed(s, K).to_string()));
    }

    // (b) chi(Z_K, 1) = 0.
    rep.checks.push_back(compare("euler-zero", "Euler number of a moment-angle complex",
                                 euler_poly_closed(Space::Zk, K).value_at_one().str(), "0"));

    const bool want_betti = attest.sphere || (attest.manifold && attest.orientable);
    BigradedBettiTable zk_table;
    if (want_betti && m <= caps.max_m_zk)
        zk_table = bigraded_betti(build_zk_complex(K, caps), jobs);

    // (c) sphere-only checks.
    if (attest.sphere) {
        std::vector<Int> lhs, rhs;
        for (int i = 0; i <= n; ++i) {
            lhs.push_back(h.at(i));
            rhs.push_back(h.at(n - i));
        }
        rep.checks.push_back(compare("ds-sphere", "Dehn-Sommerville h_i = h_{n-i}",
                                     ints_to_string(lhs), ints_to_string(rhs)));

        if (m > caps.max_m_zk) {
            rep.checks.push_back(skipped("bigraded-duality", "bigraded Poincare duality",
                                         "m exceeds cap"));
            rep.checks.push_back(skipped("strip-pattern", "sphere zero-strip", "m exceeds cap"));
        } else {
            BigradedBettiTable dual;
            dual.m = m;
            dual.n = n;
            for (int q = 0; q <= m; ++q)
                for (int p = 0; p <= m; ++p) {
                    Int v = zk_table.at({-(m - n) + q, m - p});
                    if (v != 0) dual.b[{-q, p}] = v;
                }
            rep.checks.push_back(compare("bigraded-duality", "bigraded Poincare duality",
                                         table_to_string(zk_table), table_to_string(dual)));

            bool strip_ok = true;
            std::string violation;
            for (const auto& [d, v] : zk_table.b) {
                if (v == 0) continue;
                const int q = -d.q;
                if (d.q == -(m - n) && d.p == m) {
                    if (v != 1) { strip_ok = false; violation = "top class != 1"; }
                    continue;
                }
                if (q >= m - n || (q > 0 && d.p - q >= n)) {
                    strip_ok = false;
                    violation = "b(" + std::to_string(d.q) + "," + std::to_string(2 * d.p) +
                                ")=" + v.str();
                }
            }
            rep.checks.push_back(Check{"strip-pattern", strip_ok ? CheckStatus::Pass : CheckStatus::Fail,
                                       strip_ok ? "no out-of-strip classes" : violation,
                                       "zero outside the sphere strip", "sphere zero-strip"});
        }
    }

    // (d) manifold checks (spheres are manifolds too).
    if (attest.manifold || attest.sphere) {
        const Int chiK = K.euler_number();
        const Int chiS = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
        std::vector<Int> lhs, rhs, rhs2;
        for (int i = 0; i <= n; ++i) {
            lhs.push_back(h.at(n - i) - h.at(i));
            Int c = (chiK - chiS) * binomial(n, i);
            rhs.push_back(i % 2 == 0 ? c : -c);
            Int c2 = (h.at(n) - 1) * binomial(n, i);
            rhs2.push_back(i % 2 == 0 ? c2 : -c2);
        }
        rep.checks.push_back(compare("ds-manifold", "generalized Dehn-Sommerville",
                                     ints_to_string(lhs), ints_to_string(rhs)));
        rep.checks.push_back(compare("ds-manifold-hn", "generalized Dehn-Sommerville, h_n form",
                                     ints_to_string(lhs), ints_to_string(rhs2)));

        const FVector f = K.f_vector();
        std::vector<Int> klhs, krhs;
        for (int k = 0; k < n; ++k) {
            klhs.push_back(f.at(k));
            Int s = 0;
            for (int j = k; j <= n - 1; ++j) {
                Int term = binomial(j + 1, k + 1) * f.at(j);
                s += ((n - 1 - j) % 2 == 0) ? term : -term;
            }
            krhs.push_back(s);
        }
        rep.checks.push_back(compare("ds-klee", "Dehn-Sommerville, Klee form",
                                     ints_to_string(klhs), ints_to_string(krhs)));
    }

    // (e) relative duality for orientable manifolds.
    if (attest.manifold && attest.orientable) {
        if (m > caps.max_m_wk || m > caps.max_m_zk) {
            rep.checks.push_back(
                skipped("relative-duality", "relative Poincare duality", "m exceeds cap"));
        } else {
            const BigradedBettiTable wk = bigraded_betti(build_wk_complex(K, caps), jobs);
            const BigradedBettiTable rel = bigraded_betti(build_zk_rel_torus(K, caps), jobs);
            BigradedBettiTable flipped;
            flipped.m = m;
            flipped.n = n;
            for (const auto& [d, v] : rel.b) {
                // b_{-q,2p}(W_K) = b_{-(m-n)+q,2(m-p)}(Z_K, T^m)
                if (v != 0) flipped.b[{-(m - n) - d.q, m - d.p}] = v;
            }
            rep.checks.push_back(compare("relative-duality", "relative Poincare duality",
                                         table_to_string(wk), table_to_string(flipped)));
        }
    }

    (void)status;
    return rep;
}

VerificationReport glb_report(const SimplicialComplex& K, const MomentAngleCaps& caps, int jobs) {
    VerificationReport rep;
    const int m = K.m();
    const int n = K.n();
    const HVector h = K.h_vector();
    const FVector f = K.f_vector();

    const BigradedBettiTable t = bigraded_betti(build_zk_complex(K, caps), jobs);
    const Int b3 = t.at({-1, 2});
    const Int b_14 = b3;                 // b_{-1,4}
    const Int b_26 = t.at({-2, 3});      // b_{-2,6}
    const Int b_16 = t.at({-1, 3});      // b_{-1,6}

    rep.checks.push_back(compare("b3-formula", "third Betti number of Z_K", b3.str(),
                                 Int(binomial(static_cast<long long>(f.at(0)), 2) - f.at(1)).str()));

    // h_2 - h_1 = C(m-n,2) - b_3, so the two h_1 <= h_2 formulations agree.
    rep.checks.push_back(compare("glb-h1h2-bridge", "h_1 <= h_2 vs b_3 bound",
                                 Int(h.at(2) - h.at(1)).str(),
                                 Int(binomial(m - n, 2) - b3).str()));
    rep.checks.push_back(Check{"glb-h1h2",
                               (h.at(1) <= h.at(2)) == (b3 <= binomial(m - n, 2))
                                   ? CheckStatus::Pass
                                   : CheckStatus::Fail,
                               "h1=" + h.at(1).str() + " h2=" + h.at(2).str(),
                               "b3=" + b3.str() + " bound=" + binomial(m - n, 2).str(),
                               "lower bound, h_1 <= h_2"});

    const Int betti_side = binomial(m - n + 1, 3) - Int(m - n - 1) * b_14 + b_26 - b_16;
    rep.checks.push_back(compare("glb-h2h3-bridge", "h_2 <= h_3 vs bigraded Betti bound",
                                 Int(h.at(3) - h.at(2)).str(), betti_side.str()));
    rep.checks.push_back(Check{"glb-h2h3",
                               (h.at(2) <= h.at(3)) == (betti_side >= 0) ? CheckStatus::Pass
                                                                         : CheckStatus::Fail,
                               "h2=" + h.at(2).str() + " h3=" + h.at(3).str(),
                               "betti-side=" + betti_side.str(), "lower bound, h_2 <= h_3"});
    return rep;
}

ArrangementDescriptor arrangement_descriptor(const SimplicialComplex& K,
                                             const MomentAngleCaps& caps, int jobs) {
    if (K.is_full_simplex()) throw FullSimplexError(K.m());

    ArrangementDescriptor a;
    a.m = K.m();
    for (const auto& nf : minimal_nonfaces(K).minimal_nonfaces) {
        a.maximal_planes.push_back(nf);
        a.plane_dims.push_back(K.m() - nf.count());
    }
    a.complement_betti = bigraded_betti(build_zk_complex(K, caps), jobs);
    for (const auto& [k, b] : a.complement_betti.ordinary())
        a.complement_euler += (k % 2 == 0) ? b : -b;
    return a;
}

}  // namespace mal
