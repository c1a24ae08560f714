#include <algorithm>
#include <map>
#include <set>

#include "selgames/constructions.hpp"

namespace selgames {

namespace {

// Plays sigma (Two) along histories of pool indices, memoizing the innings.
class MengerTree {
public:
    MengerTree(const GameSpec& spec, const Strategy& sigma) : spec_(spec), sigma_(sigma) {}

    struct Node {
        std::vector<Inning> innings;
        PointSet covered;
    };

    const Node& node(const std::vector<std::size_t>& s) {
        if (auto it = nodes_.find(s); it != nodes_.end()) return it->second;
        Node n;
        if (!s.empty()) {
            std::vector<std::size_t> prefix(s.begin(), s.end() - 1);
            const Node& p = node(prefix);
            n = p;
            const Move& u = spec_.one_pool[s.back()];
            Move r = reply(p, u);
            n.covered |= r.set;
            n.innings.push_back({u, std::move(r)});
        }
        return nodes_.emplace(s, std::move(n)).first->second;
    }

    // closure of the union of sigma(s + U); empty once the play is already decided.
    PointSet reply_closure(const std::vector<std::size_t>& s, std::size_t u) {
        const Node& n = node(s);
        if (n.covered == spec_.points()) return PointSet{};
        return closure(spec_.model->space, reply(n, spec_.one_pool[u]).set);
    }

private:
    Move reply(const Node& n, const Move& u) {
        if (n.covered == spec_.points()) return Move::sublist({});
        PlayContext ctx{&spec_, n.innings, &u, n.covered, static_cast<int>(n.innings.size())};
        Move r = sigma_.choose(ctx);
        if (!is_legal_two_move(spec_, u, r))
            throw IllegalMove("Two strategy answered illegally at inning " + std::to_string(n.innings.size()));
        return r;
    }

    const GameSpec& spec_;
    const Strategy& sigma_;
    std::map<std::vector<std::size_t>, Node> nodes_;
};

struct MengerRun {
    MengerExtraction result;
    std::map<std::vector<std::size_t>, std::size_t> step_of;  // history -> index into steps
};

MengerRun run_menger(const GameSpec& spec, const Strategy& sigma, const GdeltaCover& w, MengerTree& tree) {
    if (spec.kind.tag != GameTag::Menger) throw Error("extraction needs a Menger game spec");
    if (sigma.side() != Side::Two) throw Error("extraction needs a Two strategy");
    if (!is_regular(spec.model->space)) throw Error("extraction needs a regular space");
    if (!in_class(*spec.model, w, CoverClass::Alster)) throw Error("not an Alster cover");
    const PointSet all = spec.points();
    const std::size_t pool = spec.one_pool.size();
    const int depth = spec.horizon;

    MengerRun run;
    auto step = [&](const std::vector<std::size_t>& s) -> const ExtractionStep& {
        if (auto it = run.step_of.find(s); it != run.step_of.end()) return run.result.steps[it->second];
        ExtractionStep st;
        st.history = s;
        std::vector<PointSet> cls(pool);
        PointSet kernel = all;
        for (std::size_t u = 0; u < pool; ++u) {
            cls[u] = tree.reply_closure(s, u);
            kernel &= cls[u];
        }
        st.kernel = kernel;
        std::size_t chosen = w.size();
        for (std::size_t i = 0; i < w.size(); ++i)
            if (kernel.subset_of(w[i].target)) {
                chosen = i;
                break;
            }
        if (chosen == w.size()) throw Error("W is not Alster w.r.t. derived compacts (kernel " + kernel.str() + ")");
        st.chosen = chosen;
        // Greedy C_s: exclude each point outside W_s with the least pool cover whose reply closure misses it.
        PointSet outside = all - w[chosen].target;
        std::set<std::size_t> cs;
        while (!outside.empty()) {
            const int x = outside.min();
            std::size_t u = 0;
            while (u < pool && cls[u].contains(x)) ++u;
            if (u == pool) throw Error("no pool cover separates point " + std::to_string(x) + " from the kernel");
            cs.insert(u);
            outside &= cls[u];
        }
        st.witnesses.assign(cs.begin(), cs.end());
        run.step_of.emplace(s, run.result.steps.size());
        run.result.steps.push_back(std::move(st));
        return run.result.steps.back();
    };

    // A_0 = C_empty; A_{n+1} = A_n plus C_s for s of length n+1 over A_n; histories up to depth-1.
    std::set<std::size_t> a(step({}).witnesses.begin(), step({}).witnesses.end());
    auto sequences = [](const std::set<std::size_t>& alphabet, std::size_t len) {
        std::vector<std::vector<std::size_t>> out{{}};
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& s : out)
                for (std::size_t x : alphabet) {
                    auto t = s;
                    t.push_back(x);
                    next.push_back(std::move(t));
                }
            out = std::move(next);
        }
        return out;
    };
    for (int n = 0; n + 1 < depth; ++n) {
        std::set<std::size_t> grown = a;
        for (const auto& s : sequences(a, static_cast<std::size_t>(n + 1))) {
            const auto& st = step(s);
            grown.insert(st.witnesses.begin(), st.witnesses.end());
        }
        a = std::move(grown);
    }
    std::set<std::size_t> chosen;
    for (std::size_t len = 0; len < static_cast<std::size_t>(depth); ++len)
        for (const auto& s : sequences(a, len)) chosen.insert(step(s).chosen);
    PointSet covered;
    for (std::size_t i : chosen) {
        run.result.subfamily.push_back(w[i]);
        covered |= w[i].target;
    }
    run.result.covers = covered == all;
    return run;
}

}  // namespace

MengerExtraction extract_alster_subcover_from_menger(const GameSpec& spec, const Strategy& sigma,
                                                     const GdeltaCover& w) {
    MengerTree tree(spec, sigma);
    return run_menger(spec, sigma, w, tree).result;
}

std::optional<Transcript> falsify_menger_extraction(const GameSpec& spec, const Strategy& sigma,
                                                    const GdeltaCover& w) {
    MengerTree tree(spec, sigma);
    MengerRun run = run_menger(spec, sigma, w, tree);
    if (run.result.covers) return std::nullopt;
    PointSet covered;
    for (const auto& e : run.result.subfamily) covered |= e.target;
    const int p = (spec.points() - covered).min();
    // The diagonal: at each s pick the least U in C_s whose reply closure misses p.
    std::vector<std::size_t> s;
    for (int n = 0; n < spec.horizon; ++n) {
        auto it = run.step_of.find(s);
        if (it == run.step_of.end()) throw Error("falsifier left the extracted tree");
        const ExtractionStep& st = run.result.steps[it->second];
        std::size_t next = spec.one_pool.size();
        for (std::size_t u : st.witnesses)
            if (!tree.reply_closure(s, u).contains(p)) {
                next = u;
                break;
            }
        if (next == spec.one_pool.size()) throw Error("falsifier found no cover avoiding point " + std::to_string(p));
        s.push_back(next);
        // Steps for the final history are computed on demand so the last inning is available.
        if (n + 1 < spec.horizon && !run.step_of.contains(s)) throw Error("falsifier left the extracted tree");
    }
    return make_transcript(spec, tree.node(s).innings);
}

namespace {

struct PointOpenRun {
    GdeltaExtraction result;
    std::map<std::vector<std::size_t>, std::size_t> node_of;
    std::map<std::vector<std::size_t>, std::vector<Inning>> plays;
};

PointOpenRun run_pointopen(const GameSpec& spec, const Strategy& sigma, const GdeltaCover& w) {
    if (spec.kind.tag != GameTag::PointOpen) throw Error("extraction needs a point-open game spec");
    if (sigma.side() != Side::One) throw Error("extraction needs a One strategy");
    for (const auto& e : w)
        if (e.factors.empty()) throw Error("missing factor presentation for " + e.target.str());
    if (!is_gdelta_cover(*spec.model, w)) throw Error("W is not a Gdelta cover");
    const PointSet all = spec.points();

    PointOpenRun run;
    // plays[s] is the play t_s: One's points by sigma, Two's opens U(W_{s|i}, s(i)).
    std::vector<std::vector<std::size_t>> frontier{{}};
    run.plays[{}] = {};
    for (int level = 0; level < spec.horizon; ++level) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : frontier) {
            const auto& play = run.plays[s];
            PointSet covered;
            for (const auto& inn : play) covered |= inn.two.set;
            if (covered == all) continue;
            Move pt = sigma.choose(PlayContext{&spec, play, nullptr, covered, static_cast<int>(play.size())});
            if (!is_legal_one_move(spec, pt))
                throw IllegalMove("One strategy answered illegally at inning " + std::to_string(play.size()));
            const int x = pt.set.min();
            std::size_t chosen = w.size();
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i].target.contains(x)) {
                    chosen = i;
                    break;
                }
            if (chosen == w.size()) throw Error("W does not cover point " + std::to_string(x));
            run.node_of.emplace(s, run.result.nodes.size());
            run.result.nodes.push_back({s, chosen, x});
            if (level + 1 == spec.horizon) continue;
            const auto& factors = w[chosen].factors;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                auto t = s;
                t.push_back(k);
                auto p = play;
                p.push_back({pt, Move::pick(factors[k])});
                run.plays.emplace(t, std::move(p));
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    std::set<std::size_t> chosen;
    for (const auto& n : run.result.nodes) chosen.insert(n.chosen);
    PointSet covered;
    for (std::size_t i : chosen) {
        run.result.subfamily.push_back(w[i]);
        covered |= w[i].target;
    }
    run.result.covers = covered == all;
    return run;
}

}  // namespace

GdeltaExtraction extract_gdelta_subcover_from_pointopen(const GameSpec& spec, const Strategy& sigma,
                                                        const GdeltaCover& w) {
    return run_pointopen(spec, sigma, w).result;
}

std::optional<Transcript> falsify_pointopen_extraction(const GameSpec& spec, const Strategy& sigma,
                                                       const GdeltaCover& w) {
    PointOpenRun run = run_pointopen(spec, sigma, w);
    if (run.result.covers) return std::nullopt;
    PointSet covered;
    for (const auto& e : run.result.subfamily) covered |= e.target;
    const int p = (spec.points() - covered).min();
    // Follow the factors k_n that miss p.
    std::vector<std::size_t> s;
    std::vector<Inning> play;
    for (int n = 0; n < spec.horizon; ++n) {
        auto it = run.node_of.find(s);
        if (it == run.node_of.end()) throw Error("falsifier left the extracted tree");
        const TreeNode& node = run.result.nodes[it->second];
        const auto& factors = w[node.chosen].factors;
        std::size_t k = 0;
        while (k < factors.size() && factors[k].contains(p)) ++k;
        if (k == factors.size()) throw Error("every factor contains the uncovered point " + std::to_string(p));
        play.push_back({Move::point(node.point), Move::pick(factors[k])});
        s.push_back(k);
    }
    return make_transcript(spec, std::move(play));
}

}  // namespace selgames
