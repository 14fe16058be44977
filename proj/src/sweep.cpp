#include "starring/sweep.hpp"

#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/ginverse.hpp"
#include "starring/io.hpp"
#include "starring/ring.hpp"
#include "starring/solve.hpp"
#include "starring/theorems.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <thread>

namespace starring {

namespace {

using Emit = std::function<void(const std::string&, const std::string&)>;

std::string at_n(unsigned n) { return " (n=" + std::to_string(n) + ")"; }

std::string at_nm(unsigned n, unsigned m) {
    return " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

std::string mismatch_text(bool holds, bool truth) {
    return holds != truth
               ? (truth ? "inverse exists but the condition fails" : "condition holds but no inverse exists")
               : "";
}

bool has_inner(const Element& x) {
    ElementStream stream(x.ring());
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element g = stream.at(i);
        if (mul(mul(x, g), x) == x) return true;
    }
    return false;
}

void check_t31(const Element& a, const SweepOptions& opt, const Emit& emit) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    for (int k = 1; k <= 13; ++k) {
        std::string id = "T3.1(" + std::to_string(k) + ")";
        bool reads_m = k == 2 || k == 7;
        unsigned m_hi = reads_m ? opt.m_hi : opt.m_lo;
        for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
            for (unsigned m = opt.m_lo; m <= m_hi; ++m) {
                ConditionResult c = t31_condition(a, k, n, m);
                if (c.holds != truth) {
                    emit(id, mismatch_text(c.holds, truth) + at_nm(n, m));
                    continue;
                }
                if (!c.holds || !c.witness) continue;
                if (!verify_witness(a, *c.witness)) {
                    emit("T3.1.witness", id + " witness failed the independent re-check" + at_nm(n, m));
                    continue;
                }
                Element b = mp_from_witness(a, *c.witness);
                if (b != *oracle.value) {
                    std::string target = k >= 2 && k <= 4 ? id + ".formula" : "T3.1.reduction";
                    emit(target, id + " derived inverse differs from the scan inverse" + at_nm(n, m));
                }
            }
        }
    }
}

void check_multiple_criterion(const Element& a, const SweepOptions& opt, const Emit& emit,
                              const char* stem,
                              ConditionResult (*condition)(const Element&, int, unsigned)) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    for (int k = 1; k <= 5; ++k) {
        std::string id = std::string(stem) + "(" + std::to_string(k) + ")";
        for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
            ConditionResult c = condition(a, k, n);
            if (c.holds != truth) {
                emit(id, mismatch_text(c.holds, truth) + at_n(n));
                continue;
            }
            if (c.holds && c.witness && !verify_witness(a, *c.witness))
                emit(std::string(stem) + ".witness", id + " witness failed the independent re-check" + at_n(n));
        }
    }
}

void check_t32(const Element& a, const SweepOptions& opt, const Emit& emit) {
    check_multiple_criterion(a, opt, emit, "T3.2", &t32_condition);
}

void check_t33(const Element& a, const SweepOptions& opt, const Emit& emit) {
    check_multiple_criterion(a, opt, emit, "T3.3", &t33_condition);
}

void check_perturbed(const Element& a, const SweepOptions& opt, const Emit& emit, const char* stem,
                     ConditionResult (*condition)(const Element&, int, unsigned),
                     Element (*formula)(const Element&, const Witness&)) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    for (int k = 1; k <= 7; ++k) {
        std::string id = std::string(stem) + "(" + std::to_string(k) + ")";
        for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
            ConditionResult c = condition(a, k, n);
            if (c.holds != truth) {
                emit(id, mismatch_text(c.holds, truth) + at_n(n));
                continue;
            }
            if (!c.holds || !c.witness) continue;
            if (!verify_witness(a, *c.witness)) {
                emit(std::string(stem) + ".witness", id + " witness failed the independent re-check" + at_n(n));
                continue;
            }
            if (k >= 2 && formula(a, *c.witness) != *oracle.value)
                emit(std::string(stem) + ".formula",
                     id + " perturbed closed form differs from the scan inverse" + at_n(n));
        }
    }
}

void check_t34(const Element& a, const SweepOptions& opt, const Emit& emit) {
    check_perturbed(a, opt, emit, "T3.4", &t34_condition, &t34_formula);
}

void check_t35(const Element& a, const SweepOptions& opt, const Emit& emit) {
    check_perturbed(a, opt, emit, "T3.5", &t35_condition, &t35_formula);
}

void check_c36(const Element& a, const SweepOptions&, const Emit& emit) {
    bool truth = mp_oracle(a).value.has_value();
    ConditionResult ws = is_well_supported(a);
    if (ws.holds != truth)
        emit("C3.6(2)", mismatch_text(ws.holds, truth));
    else if (ws.holds && ws.witness && !verify_witness(a, *ws.witness))
        emit("C3.6.witness", "C3.6(2) witness failed the independent re-check");
    ConditionResult cs = is_co_supported(a);
    if (cs.holds != truth)
        emit("C3.6(3)", mismatch_text(cs.holds, truth));
    else if (cs.holds && cs.witness && !verify_witness(a, *cs.witness))
        emit("C3.6.witness", "C3.6(3) witness failed the independent re-check");
}

void check_t38(const Element& a, const SweepOptions& opt, const Emit& emit) {
    bool truth = mp_oracle(a).value.has_value();
    std::vector<Element> inners = inner_inverses(a);
    if (inners.empty()) {
        if (truth) emit("T3.8(2)", "inverse exists but no inner inverse was found");
        return;
    }
    static const std::pair<T38Variant, int> variants[] = {
        {T38Variant::VInvertible, 2},
        {T38Variant::VRightInvertible, 3},
        {T38Variant::UInvertible, 4},
        {T38Variant::ULeftInvertible, 5},
    };
    for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
        for (const auto& [variant, num] : variants) {
            std::string id = "T3.8(" + std::to_string(num) + ")";
            std::size_t agreeing = 0;
            for (std::size_t i = 0; i < inners.size(); ++i) {
                bool holds = t38_condition(a, inners[i], n, variant);
                if (holds == truth) {
                    ++agreeing;
                } else {
                    emit(id, mismatch_text(holds, truth) + at_n(n) + " with inner inverse " +
                                 format_element(inners[i]));
                }
            }
            if (agreeing != 0 && agreeing != inners.size())
                emit("T3.8.choice",
                     id + " answer depends on the choice of inner inverse" + at_n(n));
        }
    }
}

void check_t39_at(const Element& a, unsigned n_lo, unsigned n_hi, const char* stem, const Emit& emit) {
    bool truth = mp_oracle(a).value.has_value();
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        for (int variant = 1; variant <= 8; ++variant) {
            DecompositionCheck d = t39_decomposition(a, n, variant);
            if (d.holds == truth) continue;
            std::string parts = d.sum_is_ring ? "sum covers the ring" : "sum misses part of the ring";
            if (!d.intersection_trivial) parts += ", intersection is nontrivial";
            emit(std::string(stem) + "(" + std::to_string(variant) + ")",
                 mismatch_text(d.holds, truth) + at_n(n) + "; " + parts);
        }
    }
}

void check_t39(const Element& a, const SweepOptions& opt, const Emit& emit) {
    check_t39_at(a, opt.n_lo, opt.n_hi, "T3.9", emit);
}

void check_c310(const Element& a, const SweepOptions&, const Emit& emit) {
    check_t39_at(a, 1, 1, "C3.10", emit);
}

void check_l21(const Element& a, const SweepOptions&, const Emit& emit) {
    ElementStream stream(a.ring());
    Element h = mul(a, star(a)), g = mul(star(a), a);
    bool any13 = false, any14 = false;
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element x = stream.at(i);
        Element axa = mul(mul(a, x), a);
        Element ax = mul(a, x), xa = mul(x, a);
        bool def13 = axa == a && star(ax) == ax;
        bool crit13 = mul(star(x), g) == a;
        if (def13 != crit13)
            emit("L2.1(13)", "defining equations and the one-line criterion disagree at x = " +
                                 format_element(x));
        bool def14 = axa == a && star(xa) == xa;
        bool crit14 = mul(h, star(x)) == a;
        if (def14 != crit14)
            emit("L2.1(14)", "defining equations and the one-line criterion disagree at x = " +
                                 format_element(x));
        any13 = any13 || def13;
        any14 = any14 || def14;
    }
    if (find_13(a).value.has_value() != any13)
        emit("L2.1(13)", "finder and exhaustive scan disagree on existence");
    if (find_14(a).value.has_value() != any14)
        emit("L2.1(14)", "finder and exhaustive scan disagree on existence");
}

void check_l22(const Element& a, const SweepOptions&, const Emit& emit) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    ElementStream stream(a.ring());
    Element h = mul(a, star(a)), g = mul(star(a), a);
    std::vector<Element> xs, ys;
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element e = stream.at(i);
        if (mul(star(e), g) == a) xs.push_back(e);
        if (mul(h, star(e)) == a) ys.push_back(e);
    }
    bool exists = !xs.empty() && !ys.empty();
    if (exists != truth) {
        emit("L2.2.existence", mismatch_text(exists, truth));
        return;
    }
    if (!truth) return;
    for (const Element& y : ys) {
        Element ya = mul(y, a);
        for (const Element& x : xs) {
            if (mul(ya, x) != *oracle.value) {
                emit("L2.2.formula", "y*a*x misses the inverse at x = " + format_element(x) +
                                         ", y = " + format_element(y));
                return;
            }
        }
    }
}

void check_l23(const Element& a, const SweepOptions&, const Emit& emit) {
    InverseResult oracle = mp_oracle(a);
    if (!oracle.value) return;
    const Element& adag = *oracle.value;
    Element h = mul(a, star(a)), g = mul(star(a), a);
    Element astar_dag = star(adag); // the inverse of star(a)
    if (!is_EP(h) || !is_EP(g)) emit("L2.3.product", "a*star(a) or star(a)*a is not EP");
    InverseResult hdag = mp_oracle(h), gdag = mp_oracle(g);
    if (!hdag.value || *hdag.value != mul(astar_dag, adag))
        emit("L2.3.product", "inverse of a*star(a) is not star(inv)*inv");
    if (!gdag.value || *gdag.value != mul(adag, astar_dag))
        emit("L2.3.product", "inverse of star(a)*a is not inv*star(inv)");
    if (mul(a, star(a)) != mul(star(a), a)) return;
    if (!is_EP(a)) emit("L2.3.normal", "normal element is not EP");
    Element pk = a, bk = adag;
    for (int k = 2; k <= 4; ++k) {
        pk = mul(pk, a);
        bk = mul(bk, adag);
        if (!penrose_check(pk, bk).all())
            emit("L2.3.normal", "power rule fails at k = " + std::to_string(k));
    }
}

void check_l24(const Element& a, const SweepOptions& opt, const Emit& emit) {
    if (!mp_oracle(a).value) return;
    Element h = mul(a, star(a)), g = mul(star(a), a);
    for (unsigned j = opt.n_lo; j <= opt.n_hi; ++j) {
        if (!is_EP(power(h, j)))
            emit("L2.4", "(a*star(a))^" + std::to_string(j) + " is not EP");
        if (!is_EP(power(g, j)))
            emit("L2.4", "(star(a)*a)^" + std::to_string(j) + " is not EP");
    }
}

void check_l26(const Element& a, const SweepOptions&, const Emit& emit) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    Element h = mul(a, star(a)), g = mul(star(a), a);

    InverseResult star_oracle = mp_oracle(star(a));
    if (star_oracle.value.has_value() != truth)
        emit("L2.6(2)", mismatch_text(star_oracle.value.has_value(), truth));
    else if (truth && *star_oracle.value != star(*oracle.value))
        emit("L2.6.star", "inverse of star(a) is not star of the inverse");

    bool canc = is_star_cancellable(a);
    bool c3 = canc && has_inner(h) && has_inner(g);
    if (c3 != truth) emit("L2.6(3)", mismatch_text(c3, truth));

    bool c4 = canc && has_inner(mul(g, star(a)));
    if (c4 != truth) emit("L2.6(4)", mismatch_text(c4, truth));

    bool c5 = in_left_ideal(g, a) && in_right_ideal(h, a);
    if (c5 != truth) emit("L2.6(5)", mismatch_text(c5, truth));
}

void check_l27(const Element& a, const SweepOptions& opt, const Emit& emit) {
    if (!mp_oracle(a).value) return;
    Element h = mul(a, star(a)), g = mul(star(a), a);
    for (unsigned j = opt.n_lo; j <= opt.n_hi; ++j) {
        Element hj = power(h, j), gj = power(g, j);
        InverseResult hj_dag = mp_oracle(hj);
        if (!hj_dag.value || mul(mul(hj, *hj_dag.value), a) != a)
            emit("L2.7(1)", "left power cancellation fails at n = " + std::to_string(j));
        InverseResult gj_dag = mp_oracle(gj);
        if (!gj_dag.value || mul(a, mul(*gj_dag.value, gj)) != a)
            emit("L2.7(2)", "right power cancellation fails at n = " + std::to_string(j));
    }
}

void check_l28(const Element& a, const SweepOptions&, const Emit& emit) {
    InverseResult oracle = mp_oracle(a);
    bool truth = oracle.value.has_value();
    Element asa = mul(mul(a, star(a)), a);
    auto x = solve(MulSide::RightMul, asa, a);
    auto y = solve(MulSide::LeftMul, asa, a);
    if (x.has_value() != truth) emit("L2.8(2)", mismatch_text(x.has_value(), truth));
    if (y.has_value() != truth) emit("L2.8(3)", mismatch_text(y.has_value(), truth));
    if (!truth) return;
    if (x && mp_from_left_star_regular(a, *x) != *oracle.value)
        emit("L2.8.formula", "left factorization formula misses the inverse");
    if (y && mp_from_right_star_regular(a, *y) != *oracle.value)
        emit("L2.8.formula", "right factorization formula misses the inverse");
}

void check_l29(const Element& a, const SweepOptions&, const Emit& emit) {
    if (multiples(a, Side::Right) != multiples(star(a), Side::Right)) return;
    InverseResult oracle = mp_oracle(a);
    InverseResult grp = group_inverse(a);
    bool mp_ex = oracle.value.has_value();
    bool gr_ex = grp.value.has_value();
    bool ep = is_EP(a);
    if (mp_ex != gr_ex || mp_ex != ep) {
        emit("L2.9", std::string("under aR == star(a)R the three existence answers split: ") +
                         "mp=" + (mp_ex ? "yes" : "no") + " group=" + (gr_ex ? "yes" : "no") +
                         " ep=" + (ep ? "yes" : "no"));
        return;
    }
    if (mp_ex && *oracle.value != *grp.value)
        emit("L2.9", "both inverses exist but differ");
}

void check_l37(const Element& a, const SweepOptions&, const Emit& emit) {
    ElementStream stream(a.ring());
    Element id = one(a.ring());
    static const std::pair<Side, const char*> sides[] = {
        {Side::Left, "L3.7.left"},
        {Side::Right, "L3.7.right"},
        {Side::TwoSided, "L3.7.two_sided"},
    };
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element b = stream.at(i);
        Element e_ab = sub(id, mul(a, b));
        for (const auto& [side, claim] : sides) {
            bool ab = one_minus_invertible(a, b, side);
            bool ba = one_minus_invertible(b, a, side);
            if (ab != ba) {
                emit(claim, "invertibility of 1 - a*b and 1 - b*a differ at b = " + format_element(b));
                continue;
            }
            if (!ab) continue;
            auto u = side == Side::Right ? solve(MulSide::RightMul, e_ab, id)
                                         : solve(MulSide::LeftMul, e_ab, id);
            if (!u) {
                emit(claim, "reported invertible but no one-sided inverse was found at b = " +
                                format_element(b));
                continue;
            }
            try {
                jacobson_transfer(a, b, *u, side);
            } catch (const Error& ex) {
                emit("L3.7.transfer",
                     std::string(ex.what()) + " at b = " + format_element(b));
            }
        }
    }
}

void cross_check_oracle(const Element& a, const Emit& emit) {
    InverseResult scan = mp_oracle(a);
    InverseResult pipe = moore_penrose(a);
    if (scan.value.has_value() != pipe.value.has_value())
        emit("oracle", "pipeline and exhaustive scan disagree on existence");
    else if (scan.value && *scan.value != *pipe.value)
        emit("oracle", "pipeline inverse differs from the scan inverse");
}

using CheckFn = void (*)(const Element&, const SweepOptions&, const Emit&);

struct TheoremEntry {
    const char* id;
    CheckFn check;
    std::vector<std::string> (*claims)();
};

std::vector<std::string> numbered(const char* stem, int lo, int hi,
                                  std::initializer_list<const char*> extra = {}) {
    std::vector<std::string> ids;
    for (int k = lo; k <= hi; ++k) ids.push_back(std::string(stem) + "(" + std::to_string(k) + ")");
    for (const char* e : extra) ids.push_back(e);
    return ids;
}

const TheoremEntry kTheorems[] = {
    {"T3.1", &check_t31,
     [] {
         return numbered("T3.1", 1, 13,
                         {"T3.1(2).formula", "T3.1(3).formula", "T3.1(4).formula", "T3.1.reduction",
                          "T3.1.witness"});
     }},
    {"T3.2", &check_t32, [] { return numbered("T3.2", 1, 5, {"T3.2.witness"}); }},
    {"T3.3", &check_t33, [] { return numbered("T3.3", 1, 5, {"T3.3.witness"}); }},
    {"T3.4", &check_t34, [] { return numbered("T3.4", 1, 7, {"T3.4.formula", "T3.4.witness"}); }},
    {"T3.5", &check_t35, [] { return numbered("T3.5", 1, 7, {"T3.5.formula", "T3.5.witness"}); }},
    {"C3.6", &check_c36,
     [] { return std::vector<std::string>{"C3.6(2)", "C3.6(3)", "C3.6.witness"}; }},
    {"T3.8", &check_t38, [] { return numbered("T3.8", 2, 5, {"T3.8.choice"}); }},
    {"T3.9", &check_t39, [] { return numbered("T3.9", 1, 8); }},
    {"C3.10", &check_c310, [] { return numbered("C3.10", 1, 8); }},
    {"L2.1", &check_l21, [] { return std::vector<std::string>{"L2.1(13)", "L2.1(14)"}; }},
    {"L2.2", &check_l22, [] { return std::vector<std::string>{"L2.2.existence", "L2.2.formula"}; }},
    {"L2.3", &check_l23, [] { return std::vector<std::string>{"L2.3.product", "L2.3.normal"}; }},
    {"L2.4", &check_l24, [] { return std::vector<std::string>{"L2.4"}; }},
    {"L2.6", &check_l26,
     [] { return std::vector<std::string>{"L2.6(2)", "L2.6(3)", "L2.6(4)", "L2.6(5)", "L2.6.star"}; }},
    {"L2.7", &check_l27, [] { return std::vector<std::string>{"L2.7(1)", "L2.7(2)"}; }},
    {"L2.8", &check_l28,
     [] { return std::vector<std::string>{"L2.8(2)", "L2.8(3)", "L2.8.formula"}; }},
    {"L2.9", &check_l29, [] { return std::vector<std::string>{"L2.9"}; }},
    {"L3.7", &check_l37,
     [] {
         return std::vector<std::string>{"L3.7.left", "L3.7.right", "L3.7.two_sided",
                                         "L3.7.transfer"};
     }},
};

const TheoremEntry& entry_for(const std::string& theorem_id) {
    for (const TheoremEntry& e : kTheorems)
        if (theorem_id == e.id) return e;
    throw Error("unknown theorem id: " + theorem_id);
}

void check_options(const SweepOptions& opt) {
    if (opt.n_lo < 1 || opt.n_lo > opt.n_hi || opt.m_lo < 1 || opt.m_lo > opt.m_hi)
        throw Error("exponent ranges must satisfy 1 <= lo <= hi");
}

} // namespace

bool VerificationReport::all_agree() const {
    if (!counterexamples.empty()) return false;
    for (const auto& [id, ok] : agreement)
        if (!ok) return false;
    return true;
}

std::vector<std::string> known_theorems() {
    std::vector<std::string> ids;
    for (const TheoremEntry& e : kTheorems) ids.push_back(e.id);
    return ids;
}

std::vector<std::string> theorem_condition_ids(const std::string& theorem_id, const SweepOptions& opt) {
    std::vector<std::string> ids;
    if (opt.oracle_cross_check) ids.push_back("oracle");
    for (std::string& id : entry_for(theorem_id).claims()) ids.push_back(std::move(id));
    ids.push_back("error");
    return ids;
}

VerificationReport verify_theorem(const RingDescriptor& r, const std::string& theorem_id,
                                  const SweepOptions& opt) {
    r.check();
    check_options(opt);
    const TheoremEntry& entry = entry_for(theorem_id);
    if (!r.finite()) throw UnsupportedError("sweeps need a finite carrier, not " + r.name());
    ElementStream stream(r);
    auto start = std::chrono::steady_clock::now();

    std::uint64_t size = stream.size();
    std::uint64_t workers = opt.workers == 0
                                ? std::max(1u, std::thread::hardware_concurrency())
                                : opt.workers;
    if (workers > size) workers = size;
    if (workers == 0) workers = 1;

    std::vector<std::vector<Counterexample>> buckets(workers);
    std::vector<std::exception_ptr> failures(workers);
    std::uint64_t base = size / workers, rem = size % workers;

    auto run_range = [&](std::uint64_t w, std::uint64_t lo, std::uint64_t hi) {
        try {
            for (std::uint64_t i = lo; i < hi; ++i) {
                Element a = stream.at(i);
                std::set<std::string> seen; // one counterexample per claim per element
                auto emit = [&](const std::string& id, const std::string& details) {
                    if (!seen.insert(id).second) return;
                    buckets[w].push_back({i, format_element(a), id, details});
                };
                try {
                    if (opt.oracle_cross_check) cross_check_oracle(a, emit);
                    entry.check(a, opt, emit);
                } catch (const std::exception& ex) {
                    emit("error", ex.what());
                }
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    std::uint64_t lo = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + base + (w < rem ? 1 : 0);
        pool.emplace_back(run_range, w, lo, hi);
        lo = hi;
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& p : failures)
        if (p) std::rethrow_exception(p);

    VerificationReport report;
    report.ring = r;
    report.theorem_id = theorem_id;
    report.n_lo = opt.n_lo;
    report.n_hi = opt.n_hi;
    report.m_lo = opt.m_lo;
    report.m_hi = opt.m_hi;
    report.elements_scanned = size;
    for (std::vector<Counterexample>& bucket : buckets)
        report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());

    std::set<std::string> failing;
    for (const Counterexample& cex : report.counterexamples) failing.insert(cex.condition_id);
    for (const std::string& id : theorem_condition_ids(theorem_id, opt)) {
        report.agreement.emplace_back(id, failing.count(id) == 0);
        failing.erase(id);
    }
    for (const std::string& id : failing) report.agreement.emplace_back(id, false);

    if (report.counterexamples.size() > opt.max_counterexamples)
        report.counterexamples.resize(opt.max_counterexamples);

    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json agreement = nlohmann::json::object();
    for (const auto& [id, ok] : report.agreement) agreement[id] = ok;
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const Counterexample& cex : report.counterexamples)
        counterexamples.push_back({{"element_index", cex.element_index},
                                   {"element", cex.element},
                                   {"condition_id", cex.condition_id},
                                   {"details", cex.details}});
    return {
        {"ring", ring_to_json(report.ring)},
        {"theorem_id", report.theorem_id},
        {"params",
         {{"n", {report.n_lo, report.n_hi}}, {"m", {report.m_lo, report.m_hi}}}},
        {"elements_scanned", report.elements_scanned},
        {"agreement", agreement},
        {"counterexamples", counterexamples},
        {"elapsed_ms", report.elapsed_ms},
    };
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport report;
    report.ring = parse_ring(j.at("ring"));
    report.theorem_id = j.at("theorem_id").get<std::string>();
    const nlohmann::json& params = j.at("params");
    report.n_lo = params.at("n").at(0).get<unsigned>();
    report.n_hi = params.at("n").at(1).get<unsigned>();
    report.m_lo = params.at("m").at(0).get<unsigned>();
    report.m_hi = params.at("m").at(1).get<unsigned>();
    report.elements_scanned = j.at("elements_scanned").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("agreement").items())
        report.agreement.emplace_back(key, value.get<bool>());
    for (const nlohmann::json& c : j.at("counterexamples"))
        report.counterexamples.push_back({c.at("element_index").get<std::uint64_t>(),
                                          c.at("element").get<std::string>(),
                                          c.at("condition_id").get<std::string>(),
                                          c.at("details").get<std::string>()});
    report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return report;
}

} // namespace starring
