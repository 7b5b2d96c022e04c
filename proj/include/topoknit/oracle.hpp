#pragma once

// Brute-force loop simulator used to cross-check the CN grid. It only
// depends on the pattern types: needles hold explicit loop stacks and every
// loop carries two head contacts, named by the CN location where the loop
// was formed.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topoknit/error.hpp"
#include "topoknit/pattern.hpp"

namespace topoknit::oracle {

using Point = std::pair<int, int>;  // (i, j) in CN coordinates

enum class HeadState : std::uint8_t { Potential, Actualized, Unanchored };

inline const char* to_string(HeadState s) {
    switch (s) {
        case HeadState::Potential: return "PCN";
        case HeadState::Actualized: return "ACN";
        case HeadState::Unanchored: return "UACN";
    }
    return "?";
}

struct Head {
    HeadState state = HeadState::Potential;
    std::optional<Point> knitted_at;
    Point final_loc{};
};

struct Contact {
    Point head;      // the held loop's head
    int new_loop;    // loop pulled through it
    Point location;  // where they intertwine
};

struct TracePoint {
    Point loc;
    int stitch_row = 0;
    bool leg = false;
    std::vector<Point> heads;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct ContactTrace {
    int width = 0;
    int height = 0;
    std::vector<TracePoint> points;
    std::map<Point, Head> heads;
    std::vector<Contact> contacts;
    /// Sum over loop-forming stitches of twice the number of loops held.
    int expected_contacts = 0;
};

namespace detail {

struct Loop {
    Point heads[2];
};

struct Simulator {
    const StitchPattern& p;
    ContactTrace out;
    std::vector<Loop> loops;
    std::vector<std::vector<int>> needles;

    explicit Simulator(const StitchPattern& pat) : p(pat) {
        out.width = 2 * p.cols();
        out.height = p.rows() + 1;
        needles.resize(static_cast<std::size_t>(p.cols()));
        for (int k = 0; k < p.cols(); ++k)
            if (p.at(k, 0).kind != StitchKind::Empty)
                needles[k].push_back(new_loop(k, 0, HeadState::Potential, HeadState::Potential));
    }

    int new_loop(int needle, int row, HeadState left, HeadState right) {
        Loop l{{{2 * needle, row}, {2 * needle + 1, row}}};
        out.heads[l.heads[0]].state = left;
        out.heads[l.heads[1]].state = right;
        loops.push_back(l);
        return static_cast<int>(loops.size()) - 1;
    }

    bool was_actualized(const std::map<Point, HeadState>& snapshot, int i, int j) const {
        auto it = snapshot.find({i, j});
        return it != snapshot.end() && it->second == HeadState::Actualized;
    }

    void run() {
        for (int n = 0; n < p.rows(); ++n) knit_row(n);
        for (int k = 0; k < p.cols(); ++k)
            for (int id : needles[k])
                for (int s = 0; s < 2; ++s) out.heads[loops[id].heads[s]].final_loc = {2 * k + s, p.rows()};
        for (auto& [pt, h] : out.heads)
            if (h.knitted_at) h.final_loc = *h.knitted_at;
    }

    void knit_row(int n) {
        std::map<Point, HeadState> before;
        for (const auto& [pt, h] : out.heads) before[pt] = h.state;
        std::vector<Point> arrived;
        std::vector<std::pair<int, int>> moves;  // (loop, destination)

        const bool ltr = carry_direction_of(n) == CarryDirection::LeftToRight;
        for (int step = 0; step < p.cols(); ++step) {
            const int k = ltr ? step : p.cols() - 1 - step;
            const StitchInstruction& st = p.at(k, n);
            if (st.forms_loop_through()) {
                HeadState up[2];
                const int fresh = static_cast<int>(loops.size());
                for (int s = 0; s < 2; ++s) {
                    const int x = 2 * k + s;
                    bool potential = false;
                    for (int id : needles[k]) {
                        const Point hp = loops[id].heads[s];
                        Head& h = out.heads[hp];
                        out.contacts.push_back({hp, fresh, {x, n}});
                        h.knitted_at = Point{x, n};
                        if (hp == Point{x, n}) {
                            if (h.state == HeadState::Potential) h.state = HeadState::Actualized;
                            if (h.state == HeadState::Unanchored &&
                                (was_actualized(before, x - 1, n - 1) || was_actualized(before, x + 1, n - 1)))
                                h.state = HeadState::Actualized;
                            potential = potential || h.state == HeadState::Actualized;
                        } else {
                            potential = true;
                            arrived.push_back(hp);
                        }
                    }
                    out.expected_contacts += static_cast<int>(needles[k].size());
                    up[s] = potential ? HeadState::Potential : HeadState::Unanchored;
                }
                needles[k] = {new_loop(k, n + 1, up[0], up[1])};
                if (st.is_transfer()) {
                    const int dest = k + st.needle_shift();
                    if (dest < 0 || dest >= p.cols()) throw Error("oracle: transfer leaves the needle bed");
                    moves.emplace_back(needles[k].front(), dest);
                }
            } else if (st.kind == StitchKind::Tuck) {
                needles[k].push_back(new_loop(k, n + 1, HeadState::Unanchored, HeadState::Unanchored));
            }
        }

        for (const Point& hp : arrived) {
            Head& h = out.heads[hp];
            if (h.state == HeadState::Potential) h.state = HeadState::Actualized;
        }
        for (auto [id, to] : moves) {
            for (auto& stack : needles) std::erase(stack, id);
            needles[to].push_back(id);
        }
    }
};

/// Yarn points of one stitch in carry order: leg, head, head, leg.
inline std::vector<std::pair<Point, bool>> stitch_points(int k, int n) {
    const bool ltr = carry_direction_of(n) == CarryDirection::LeftToRight;
    const int a = ltr ? 2 * k : 2 * k + 1;
    const int b = ltr ? 2 * k + 1 : 2 * k;
    return {{{a, n}, true}, {{a, n + 1}, false}, {{b, n + 1}, false}, {{b, n}, true}};
}

struct Walker {
    ContactTrace& t;
    const StitchPattern& p;
    std::map<Point, std::vector<Point>> ending_at;

    Walker(ContactTrace& trace, const StitchPattern& pat) : t(trace), p(pat) {
        for (const auto& [pt, h] : t.heads) ending_at[h.final_loc].push_back(pt);
    }

    struct Visit {
        Point loc;
        bool leg;
        int row;
    };

    std::vector<Visit> visits() const {
        std::vector<Visit> v;
        for (int n = 0; n < p.rows(); ++n) {
            const bool ltr = carry_direction_of(n) == CarryDirection::LeftToRight;
            for (int step = 0; step < p.cols(); ++step) {
                const int k = ltr ? step : p.cols() - 1 - step;
                for (auto [pt, leg] : stitch_points(k, n)) v.push_back({pt, leg, n});
            }
        }
        return v;
    }

    std::vector<Point> actualized_at(Point loc) const {
        std::vector<Point> out;
        auto it = ending_at.find(loc);
        if (it == ending_at.end()) return out;
        for (const Point& hp : it->second)
            if (t.heads.at(hp).state == HeadState::Actualized) out.push_back(hp);
        return out;
    }

    const Head* head_at(Point loc) const {
        auto it = t.heads.find(loc);
        return it == t.heads.end() ? nullptr : &it->second;
    }

    static bool first_head(Point loc) { return (loc.first % 2 == 0) == (loc.second % 2 == 1); }

    std::optional<int> last_anchor_row() const {
        for (auto it = t.points.rbegin(); it != t.points.rend(); ++it) {
            if (it->leg) return it->loc.second;
            if (t.heads.at(it->heads.front()).state == HeadState::Actualized) return it->loc.second;
        }
        return std::nullopt;
    }

    std::optional<int> forward_anchor_row(const std::vector<Visit>& v, std::size_t from) const {
        for (std::size_t q = from + 1; q < v.size(); ++q) {
            if (v[q].leg) {
                if (!actualized_at(v[q].loc).empty()) return v[q].loc.second;
                continue;
            }
            const Head* h = head_at(v[q].loc);
            if (!h) continue;
            if (h->state == HeadState::Actualized) return h->final_loc.second;
            if (h->state != HeadState::Unanchored || !first_head(v[q].loc)) continue;
            const auto back = last_anchor_row();
            if (back && *back < h->final_loc.second && h->final_loc.second < t.height - 1)
                return h->final_loc.second;
        }
        return std::nullopt;
    }

    void run() {
        const auto v = visits();
        for (std::size_t q = 0; q < v.size(); ++q) {
            const Visit& cur = v[q];
            if (cur.leg) {
                auto here = actualized_at(cur.loc);
                if (!here.empty()) t.points.push_back({cur.loc, cur.row, true, std::move(here)});
                continue;
            }
            auto it = t.heads.find(cur.loc);
            if (it == t.heads.end()) continue;
            Head& h = it->second;
            if (h.state == HeadState::Unanchored) {
                const auto n = first_head(cur.loc) ? last_anchor_row() : forward_anchor_row(v, q);
                if (!n || *n >= h.final_loc.second) continue;
                h.state = cur.loc.second == t.height - 1 ? HeadState::Potential : HeadState::Actualized;
            }
            t.points.push_back({h.final_loc, cur.row, false, {cur.loc}});
        }
    }
};

}  // namespace detail

/// Knits the pattern loop by loop and returns the contacts plus the yarn
/// trace with unanchored heads resolved against their neighbours.
inline ContactTrace simulate(const StitchPattern& p) {
    detail::Simulator sim(p);
    sim.run();
    ContactTrace t = std::move(sim.out);
    detail::Walker w(t, p);
    w.run();
    return t;
}

inline std::string format_trace(const ContactTrace& t) {
    std::string out;
    for (const auto& pt : t.points) {
        out += pt.leg ? "leg " : "head ";
        out += "(" + std::to_string(pt.loc.first) + "," + std::to_string(pt.loc.second) + ") row " +
               std::to_string(pt.stitch_row) + "\n";
    }
    for (const auto& [pt, h] : t.heads) {
        out += "cn (" + std::to_string(pt.first) + "," + std::to_string(pt.second) + ") " + to_string(h.state) +
               " -> (" + std::to_string(h.final_loc.first) + "," + std::to_string(h.final_loc.second) + ")\n";
    }
    return out;
}

}  // namespace topoknit::oracle
