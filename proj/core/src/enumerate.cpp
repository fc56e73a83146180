#include "qsfill/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "qsfill/errors.hpp"
#include "qsfill/verify.hpp"

namespace qsfill {

std::string to_string(TargetKind k) {
    switch (k) {
        case TargetKind::Cyclic: return "cyclic";
        case TargetKind::Dihedral: return "dihedral";
        case TargetKind::Type32: return "(3,2)";
        case TargetKind::Type31: return "(3,1)";
    }
    return "?";
}

Target Target::of(const SingularityId& s) {
    Target t;
    t.id = s;
    if (s.family == Family::Cyclic) {
        t.kind = TargetKind::Cyclic;
        WeightedGraph g = compactifying_divisor(s);
        t.dd = g.weight("L");
        for (std::size_t i = 1; g.find("C" + std::to_string(i)); ++i) t.weights.push_back(g.weight("C" + std::to_string(i)));
        return t;
    }
    if (s.family == Family::Dihedral) t.kind = TargetKind::Dihedral;
    else t.kind = classify_type(s) == SingularityType::Type31 ? TargetKind::Type31 : TargetKind::Type32;
    Configuration c = cusp_transform(s);
    t.dd = c.self("D");
    for (std::size_t i = 1; c.curve("C" + std::to_string(i)); ++i) t.weights.push_back(c.self("C" + std::to_string(i)));
    return t;
}

int default_max_blowups(const Target& t) {
    std::int64_t bound = static_cast<std::int64_t>(t.k()) + 2;
    for (auto w : t.weights) bound += -w;
    if (t.kind != TargetKind::Cyclic) bound += 9 - t.dd;
    return static_cast<int>(bound);
}

std::vector<FillingDescriptor> EnumerationResult::descriptors() const {
    std::vector<FillingDescriptor> out;
    for (const auto& f : fillings) out.push_back(f.descriptor);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// chain.curves[0] is the anchor; links[i] joins curves[i] and curves[i+1]
struct Chain {
    std::vector<std::string> curves;
    std::vector<int> links;
};

struct State {
    Configuration cfg;
    Chain chain;
    std::vector<RewriteStep> steps;
};

class Ctx {
public:
    Ctx(const Target& t, const SearchCaps& caps)
        : target(t), caps(caps), deadline(Clock::now() + caps.time_budget) {
        max_blowups = caps.max_blowups > 0 ? caps.max_blowups : default_max_blowups(t);
    }

    const Target& target;
    const SearchCaps& caps;
    Clock::time_point deadline;
    int max_blowups = 0;
    std::atomic<std::size_t> explored{0};

    void truncate(const std::string& why) {
        std::lock_guard<std::mutex> lk(mu_);
        if (reason_.empty()) reason_ = why;
    }
    bool truncated() const {
        std::lock_guard<std::mutex> lk(mu_);
        return !reason_.empty();
    }
    std::string reason() const {
        std::lock_guard<std::mutex> lk(mu_);
        return reason_;
    }
    bool expired() {
        if (Clock::now() > deadline) {
            truncate("time budget exhausted");
            return true;
        }
        return false;
    }
    bool over_cap(std::size_t steps) {
        if (steps > static_cast<std::size_t>(max_blowups)) {
            truncate("max_blowups (" + std::to_string(max_blowups) + ") reached");
            return true;
        }
        return false;
    }
    void add(FillingDescriptor d, Witness w) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = found_.find(d);
        // keep the shortest witness, ties broken by step list, so the choice
        // does not depend on exploration order
        if (it == found_.end() || w.steps.size() < it->second.steps.size() ||
            (w.steps.size() == it->second.steps.size() && step_key(w) < step_key(it->second)))
            found_[std::move(d)] = std::move(w);
    }
    std::map<FillingDescriptor, Witness> take() { return std::move(found_); }

    // T_q for 1-based q
    std::int64_t tw(std::size_t q) const { return target.weights[q - 1]; }
    // smallest target weight over positions lo..hi (clamped to the string)
    std::int64_t min_tw(std::size_t lo, std::size_t hi) const {
        hi = std::min(hi, target.k());
        std::int64_t m = 0;
        bool any = false;
        for (std::size_t q = lo; q <= hi; ++q) {
            m = any ? std::min(m, tw(q)) : tw(q);
            any = true;
        }
        return any ? m : INT64_MIN;
    }

private:
    static std::vector<std::tuple<int, int, std::string>> step_key(const Witness& w) {
        std::vector<std::tuple<int, int, std::string>> k;
        for (const auto& s : w.steps) k.emplace_back(static_cast<int>(s.kind), s.point, s.curve);
        return k;
    }

    mutable std::mutex mu_;
    std::string reason_;
    std::map<FillingDescriptor, Witness> found_;
};

int point_with(const Configuration& c, const std::string& a, const std::string& b) {
    auto p = c.point_between(a, b);
    if (!p) throw DomainError("internal: lost the intersection of " + a + " and " + b);
    return *p;
}

State node_move(const State& s, std::size_t i) {
    State n = s;
    int pid = n.chain.links[i];
    std::string e = n.cfg.blow_up_at(pid);
    n.steps.push_back(RewriteStep::at_point(pid));
    int left = point_with(n.cfg, n.chain.curves[i], e);
    int right = point_with(n.cfg, e, n.chain.curves[i + 1]);
    n.chain.curves.insert(n.chain.curves.begin() + static_cast<std::ptrdiff_t>(i) + 1, e);
    n.chain.links[i] = left;
    n.chain.links.insert(n.chain.links.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
    return n;
}

State fresh_end_move(const State& s) {
    State n = s;
    std::string last = n.chain.curves.back();
    std::string e = n.cfg.blow_up_fresh(last);
    n.steps.push_back(RewriteStep::fresh_on(last));
    n.chain.links.push_back(point_with(n.cfg, last, e));
    n.chain.curves.push_back(e);
    return n;
}

std::vector<std::int64_t> chain_key(const State& s) {
    std::vector<std::int64_t> k;
    for (const auto& c : s.chain.curves) k.push_back(s.cfg.self(c));
    return k;
}

// Breadth-first growth of the chain by node blow-ups at its links and, when
// allowed, fresh blow-ups at its far end.  Each weight pattern is kept
// once; every kept state up to max_size curves is returned.
std::vector<State> grow(const State& start, std::size_t max_size, bool fresh_end,
                        const std::function<bool(const State&)>& viable, Ctx& ctx) {
    std::vector<State> out;
    if (!viable(start)) return out;
    std::set<std::vector<std::int64_t>> seen{chain_key(start)};
    std::vector<State> level{start};
    std::mt19937_64 rng(ctx.caps.shuffle_seed.value_or(0) ^ start.steps.size());
    // States reaching the same chain in one level differ only in the order
    // of commuting blow-ups; keeping the smallest step list makes the result
    // independent of move order.
    auto smaller = [](const std::vector<RewriteStep>& a, const std::vector<RewriteStep>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const RewriteStep& x, const RewriteStep& y) {
            return std::tie(x.kind, x.point, x.curve) < std::tie(y.kind, y.point, y.curve);
        });
    };
    while (!level.empty()) {
        std::map<std::vector<std::int64_t>, State> next;
        for (const State& s : level) {
            out.push_back(s);
            ++ctx.explored;
            if (s.chain.curves.size() >= max_size) continue;
            if (ctx.expired()) return out;
            std::vector<std::size_t> moves;
            for (std::size_t i = 0; i < s.chain.links.size(); ++i) moves.push_back(i);
            if (fresh_end) moves.push_back(SIZE_MAX);
            if (ctx.caps.shuffle_seed) std::shuffle(moves.begin(), moves.end(), rng);
            for (std::size_t mv : moves) {
                State n = mv == SIZE_MAX ? fresh_end_move(s) : node_move(s, mv);
                auto key = chain_key(n);
                if (seen.count(key)) continue;
                if (!viable(n)) continue;
                if (ctx.over_cap(n.steps.size())) continue;
                auto it = next.find(key);
                if (it == next.end()) next.emplace(std::move(key), std::move(n));
                else if (smaller(n.steps, it->second.steps)) it->second = std::move(n);
            }
        }
        level.clear();
        for (auto& [key, st] : next) {
            seen.insert(key);
            level.push_back(std::move(st));
        }
    }
    return out;
}

// Chain [anchor, X1..Xn] whose X's still have to reach string positions
// first_pos.. with `spare` insertions to come: each X_p ends somewhere in
// first_pos+p-1 .. first_pos+p-1+spare.
bool positions_viable(const State& s, std::size_t from, std::size_t first_pos, std::size_t spare, Ctx& ctx) {
    for (std::size_t i = from; i < s.chain.curves.size(); ++i) {
        std::size_t lo = first_pos + (i - from);
        if (lo > ctx.target.k()) return false;
        if (s.cfg.self(s.chain.curves[i]) < ctx.min_tw(lo, lo + spare)) return false;
    }
    return true;
}

// Attachments on chain curves, then s fresh blow-ups on D; records the
// filling if everything fits.
void finish(State st, const std::vector<std::string>& string, StandardModel model, std::int64_t free_d, Ctx& ctx) {
    std::vector<std::int64_t> attach;
    std::size_t total = st.steps.size();
    for (std::size_t i = 0; i < string.size(); ++i) {
        std::int64_t a = st.cfg.self(string[i]) - ctx.tw(i + 1);
        if (a < 0) return;
        attach.push_back(a);
        total += static_cast<std::size_t>(a);
    }
    if (free_d < 0) return;
    total += static_cast<std::size_t>(free_d);
    if (ctx.over_cap(total)) return;
    for (std::size_t i = 0; i < string.size(); ++i)
        for (std::int64_t r = 0; r < attach[i]; ++r) {
            st.cfg.blow_up_fresh(string[i]);
            st.steps.push_back(RewriteStep::fresh_on(string[i]));
        }
    for (std::int64_t r = 0; r < free_d; ++r) {
        st.cfg.blow_up_fresh("D");
        st.steps.push_back(RewriteStep::fresh_on("D"));
    }
    Witness w;
    w.singularity = ctx.target.id;
    w.model = model;
    w.steps = std::move(st.steps);
    for (const auto& n : {"D", "A", "B", "L"})
        if (st.cfg.curve(n)) w.labels.emplace_back(n, n);
    for (std::size_t i = 0; i < string.size(); ++i) w.labels.emplace_back(string[i], "C" + std::to_string(i + 1));
    Configuration z = witness_configuration(w);
    FillingDescriptor d = describe(z, ctx.target, model);
    if (d.case_tag == CaseTag::CaseII && case2_violation(d)) return;
    ctx.add(std::move(d), std::move(w));
}

State initial(StandardModel m) {
    State s;
    s.cfg = standard_model(m);
    return s;
}

// String grown from a fresh point of D, as in every model except case II.
void search_from_d(State start, StandardModel model, bool exact_free, Ctx& ctx) {
    const std::size_t k = ctx.target.k();
    const std::int64_t d = ctx.target.dd;
    auto free_of = [&](const State& s) { return s.cfg.self("D") - d; };
    if (k == 0) {
        std::int64_t s = free_of(start);
        if (exact_free ? s == 0 : s >= 0) finish(start, {}, model, s, ctx);
        return;
    }
    start.chain = {{"D"}, {}};
    auto viable = [&](const State& s) {
        if (free_of(s) < 0) return false;
        std::size_t n = s.chain.curves.size() - 1;
        return n <= k && positions_viable(s, 1, 1, k - n, ctx);
    };
    for (State& s : grow(start, k + 1, true, viable, ctx)) {
        if (s.chain.curves.size() != k + 1) continue;
        std::int64_t f = free_of(s);
        if (exact_free && f != 0) continue;
        std::vector<std::string> string(s.chain.curves.begin() + 1, s.chain.curves.end());
        finish(std::move(s), string, model, f, ctx);
    }
}

void search_cyclic(Ctx& ctx) {
    const std::size_t k = ctx.target.k();
    State start = initial(StandardModel::TwoLines_P2);
    start.chain = {{"C1"}, {}};
    auto viable = [&](const State& s) {
        std::size_t n = s.chain.curves.size();
        if (n > k) return false;
        if (s.cfg.self("C1") < ctx.tw(1)) return false;
        return positions_viable(s, 1, 2, k - n, ctx);
    };
    for (State& s : grow(start, k, true, viable, ctx)) {
        if (s.chain.curves.size() != k) continue;
        std::vector<std::string> string = s.chain.curves;
        finish(std::move(s), string, StandardModel::TwoLines_P2, 0, ctx);
    }
}

// Case II: C meets D at p and q.  Node blow-ups at p give C_1..C_{i-1}
// between D and C = C_i; node blow-ups at q give C_{i+1}..C_j; F is the
// blow-up of C_j with D; the rest of the string grows from C_j; E is the
// blow-up of C with B.
void search_case2(Ctx& ctx) {
    const std::size_t k = ctx.target.k();
    const std::int64_t d = ctx.target.dd;
    if (k == 0) return;
    State start = initial(StandardModel::CuspQuadricThreeFibres_Q);
    std::vector<int> dc = start.cfg.points_on("C");
    int p = -1, q = -1, r = -1;
    for (int id : dc) {
        const IncidencePoint* pt = start.cfg.point(id);
        if (pt->contains("D")) (p < 0 ? p : q) = id;
        if (pt->contains("B")) r = id;
    }

    start.chain = {{"D", "C"}, {p}};
    auto left_viable = [&](const State& s) {
        if (s.cfg.self("D") < d + 1) return false;
        std::size_t inner = s.chain.curves.size() - 2;
        if (inner + 1 > k) return false;
        std::size_t spare = k - 1 - inner;
        for (std::size_t i = 1; i <= inner; ++i)
            if (s.cfg.self(s.chain.curves[i]) < ctx.min_tw(i, i + spare)) return false;
        return s.cfg.self("C") >= ctx.min_tw(inner + 1, k) + 1;
    };
    std::vector<State> lefts = grow(start, k + 1, false, left_viable, ctx);

    auto per_left = [&](const State& left) {
        std::size_t li = left.chain.curves.size() - 2;
        std::size_t i = li + 1;
        std::vector<std::string> head(left.chain.curves.begin() + 1, left.chain.curves.end() - 1);
        State rs = left;
        rs.chain = {{"C", "D"}, {q}};
        auto right_viable = [&](const State& s) {
            if (s.cfg.self("D") < d + 1) return false;
            std::size_t inner = s.chain.curves.size() - 2;
            if (i + inner > k) return false;
            std::size_t spare = k - i - inner;
            for (std::size_t x = 1; x <= inner; ++x)
                if (s.cfg.self(s.chain.curves[x]) < ctx.min_tw(i + x, i + x + spare)) return false;
            return s.cfg.self("C") >= ctx.tw(i) + 1;
        };
        for (const State& right : grow(rs, k - li + 1, false, right_viable, ctx)) {
            if (ctx.expired()) return;
            std::size_t m = right.chain.curves.size() - 2;
            std::size_t j = i + m;
            std::vector<std::string> string = head;
            string.insert(string.end(), right.chain.curves.begin(), right.chain.curves.end() - 1);
            // F
            State f = right;
            int fpoint = f.chain.links.back();
            f.cfg.blow_up_at(fpoint);
            f.steps.push_back(RewriteStep::at_point(fpoint));
            if (f.cfg.self("D") < d) continue;
            if (ctx.over_cap(f.steps.size())) continue;
            std::size_t tail = k - j;
            std::vector<State> tails;
            if (tail == 0) {
                tails.push_back(f);
            } else {
                f.chain = {{string.back()}, {}};
                auto tail_viable = [&](const State& s) {
                    std::size_t n = s.chain.curves.size() - 1;
                    if (n > tail) return false;
                    if (s.cfg.self(s.chain.curves[0]) < ctx.tw(j)) return false;
                    return positions_viable(s, 1, j + 1, tail - n, ctx);
                };
                for (State& t : grow(f, tail + 1, true, tail_viable, ctx))
                    if (t.chain.curves.size() == tail + 1) tails.push_back(std::move(t));
            }
            for (State& t : tails) {
                std::vector<std::string> full = string;
                if (tail) full.insert(full.end(), t.chain.curves.begin() + 1, t.chain.curves.end());
                // E
                t.cfg.blow_up_at(r);
                t.steps.push_back(RewriteStep::at_point(r));
                std::int64_t free_d = t.cfg.self("D") - d;
                finish(std::move(t), full, StandardModel::CuspQuadricThreeFibres_Q, free_d, ctx);
            }
        }
    };

    unsigned threads = std::max(1u, ctx.caps.threads);
    if (threads == 1) {
        for (const State& l : lefts) per_left(l);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t x = next++; x < lefts.size(); x = next++) per_left(lefts[x]);
        }));
    for (auto& w : workers) w.get();
}

}  // namespace

EnumerationResult search_fillings(const SingularityId& s, const SearchCaps& caps) {
    if (caps.max_blowups < 0 || caps.max_solutions == 0 || caps.time_budget.count() <= 0)
        throw DomainError("search caps must be positive");
    Target t = Target::of(s);
    Ctx ctx(t, caps);
    switch (t.kind) {
        case TargetKind::Cyclic:
            search_cyclic(ctx);
            break;
        case TargetKind::Dihedral:
            search_from_d(initial(StandardModel::CuspCubicPlusLine_blownP2), StandardModel::CuspCubicPlusLine_blownP2,
                          false, ctx);
            search_from_d(initial(StandardModel::CuspQuadricOneFibre_Q), StandardModel::CuspQuadricOneFibre_Q, true, ctx);
            break;
        case TargetKind::Type32:
            search_from_d(initial(StandardModel::CuspCubic_P2), StandardModel::CuspCubic_P2, false, ctx);
            search_from_d(initial(StandardModel::CuspQuadric_Q), StandardModel::CuspQuadric_Q, true, ctx);
            break;
        case TargetKind::Type31: {
            State one = initial(StandardModel::CuspQuadricTwoFibres_Q);
            one.cfg.blow_up_fresh("B");
            one.steps.push_back(RewriteStep::fresh_on("B"));
            search_from_d(std::move(one), StandardModel::CuspQuadricTwoFibres_Q, false, ctx);
            search_case2(ctx);
            break;
        }
    }
    EnumerationResult res;
    for (auto& [d, w] : ctx.take()) res.fillings.push_back({d, std::move(w)});
    if (res.fillings.size() > caps.max_solutions) {
        res.fillings.resize(caps.max_solutions);
        ctx.truncate("max_solutions (" + std::to_string(caps.max_solutions) + ") reached");
    }
    res.complete = !ctx.truncated();
    res.incomplete_reason = ctx.reason();
    res.states_explored = ctx.explored;
    return res;
}

std::vector<FillingDescriptor> enumerate_fillings(const SingularityId& s, const SearchCaps& caps) {
    EnumerationResult r = search_fillings(s, caps);
    if (!r.complete) {
        std::string why = "enumeration of " + s.str() + " incomplete: " + r.incomplete_reason;
        throw CapsExhausted(why, std::move(r));
    }
    return r.descriptors();
}

}  // namespace qsfill
