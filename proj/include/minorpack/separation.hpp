#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "minorpack/bigint.hpp"
#include "minorpack/orchard.hpp"

namespace minorpack {

// Threshold policy. Defaults evaluate the exact closed forms, which are
// astronomically large; the override carries small constants so both branches
// of every dichotomy are reachable at desk scale.
struct ThresholdOverride {
    BigInt f_sep;
    BigInt g_sep;
    BigInt f_58;
    BigInt g_58;
};

class Thresholds {
public:
    Thresholds() = default;
    static Thresholds paper() { return Thresholds(); }
    static Thresholds with_override(ThresholdOverride ov) {
        Thresholds t;
        t.ov_ = std::move(ov);
        return t;
    }

    bool overridden() const { return ov_.has_value(); }

    BigInt f_sep(const BigInt& c, int m) const;
    BigInt g_sep(const BigInt& c, int m) const;
    BigInt f_58(const BigInt& c, int m) const;
    BigInt g_58(const BigInt& c, int m) const;

    // The slack used by the depth-m cut: f_58 - 5(f+g)(g_58 + 1).
    BigInt z_58(const BigInt& c, int m) const;

private:
    std::optional<ThresholdOverride> ov_;
};

struct ThresholdQuad {
    BigInt f_sep, g_sep, f_58, g_58;
};

ThresholdQuad thresholds_eval(const BigInt& c, int m, const Thresholds& th = {});

// Raised when override thresholds admit a branch whose construction cannot
// complete (never happens with the default formulas).
struct ThresholdTooWeak : std::runtime_error {
    explicit ThresholdTooWeak(const std::string& what)
        : std::runtime_error("threshold regime too weak: " + what) {}
};

struct ManyOrchards {
    std::vector<Orchard> orchards;  // 2^m pairwise disjoint (a+1) x c
};

struct SeesCutset {
    VertexSet x;
    std::vector<int> seen_sections;  // section ids still seen by the rest
};

struct ReachCutset {
    VertexSet x;
    std::vector<int> reached_sections;  // recomputed in g - x
};

struct BrambleFound {
    Bramble bramble;
    bool order_verified = false;
    int verified_order = 0;
};

struct ComponentCutset {
    VertexSet x;
    // (smallest vertex of the component, number of sections of r it meets)
    std::vector<std::pair<int, int>> component_section_counts;
};

using SepOutcome = std::variant<ManyOrchards, SeesCutset, ReachCutset, BrambleFound,
                                ComponentCutset>;

// Section ids (indices into `secs`) with a direct edge from `from`.
std::vector<int> sections_seen_by(const Graph& g, const std::vector<Section>& secs,
                                  const VertexSet& from);

// Section ids reachable from `from` in g - removed via paths whose internal
// vertices avoid the orchard; `skip` drops one section id from the result.
std::vector<int> sections_reached_by(const Graph& g, const Orchard& r,
                                     const std::vector<Section>& secs,
                                     const VertexSet& from, const VertexSet& removed,
                                     int skip = -1);

// Pairwise separation: 2^m disjoint (a+1) x c orchards inside
// G[V(r) u V(r2)], or a small X in V(r2) with the rest seeing few sections.
SepOutcome separate_orchards(const Graph& g, const Orchard& r, const Orchard& r2, int c,
                             int m, const Thresholds& th);

// Reach variant: the cutset lives outside V(r) and bounds what V(r2) can
// still reach.
SepOutcome separate_reach(const Graph& g, const Orchard& r, const Orchard& r2, int c,
                          int m, const Thresholds& th);

// Section variant: isolates one section from the rest of its orchard.
SepOutcome separate_section(const Graph& g, const Orchard& r, const Section& s, int c,
                            int m, const Thresholds& th);

// Full separation: bramble of order >= m, many orchards, or a cutset bounding
// per-component section contact.
SepOutcome separate_full(const Graph& g, const Orchard& r, const Orchard& r2, int c,
                         int m, const Thresholds& th);

const char* sep_outcome_tag(const SepOutcome& out);

}  // namespace minorpack
