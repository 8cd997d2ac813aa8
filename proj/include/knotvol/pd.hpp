#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace knotvol {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct diagram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A dart is one of the four edge-ends at a crossing; slot 0 is the incoming
/// under-strand, slots run counterclockwise.  The strand entering at slot p
/// leaves at slot (p+2) mod 4; slots 0,2 are the under-strand passage.
struct Dart {
    int x = -1;  ///< crossing index
    int p = -1;  ///< slot 0..3

    friend bool operator==(const Dart&, const Dart&) = default;
};

inline int dart_id(const Dart& d) { return 4 * d.x + d.p; }

/// A link diagram given by PD quadruples over positive integer edge labels.
/// Validated on construction: every label occurs exactly twice and the
/// underlying 4-valent graph is connected.
class LinkDiagram {
public:
    explicit LinkDiagram(std::vector<std::array<int, 4>> quads) : crossings_(std::move(quads)) {
        if (crossings_.empty()) throw parse_error("empty diagram");
        std::unordered_map<int, std::vector<Dart>> occ;
        for (int x = 0; x < crossing_count(); ++x) {
            for (int p = 0; p < 4; ++p) {
                const int label = crossings_[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)];
                if (label <= 0) throw parse_error("edge labels must be positive integers");
                occ[label].push_back({x, p});
            }
        }
        for (const auto& [label, darts] : occ) {
            if (darts.size() != 2) {
                throw parse_error("edge label " + std::to_string(label) + " appears " +
                                  std::to_string(darts.size()) + " times (expected 2)");
            }
        }
        twin_.assign(static_cast<std::size_t>(4 * crossing_count()), Dart{});
        for (const auto& [label, darts] : occ) {
            twin_[static_cast<std::size_t>(dart_id(darts[0]))] = darts[1];
            twin_[static_cast<std::size_t>(dart_id(darts[1]))] = darts[0];
        }
        check_connected();
        trace_components();
    }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int component_count() const { return static_cast<int>(components_.size()); }

    const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }

    int label(const Dart& d) const {
        return crossings_[static_cast<std::size_t>(d.x)][static_cast<std::size_t>(d.p)];
    }

    /// The other end of the edge at this dart.
    const Dart& twin(const Dart& d) const { return twin_[static_cast<std::size_t>(dart_id(d))]; }

    /// Strand cycles: each component as the cyclic list of darts at which the
    /// strand enters a crossing.
    const std::vector<std::vector<Dart>>& components() const { return components_; }

private:
    void check_connected() const {
        std::vector<char> seen(crossings_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int p = 0; p < 4; ++p) {
                const int y = twin_[static_cast<std::size_t>(dart_id({x, p}))].x;
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached != crossing_count()) throw parse_error("diagram is disconnected");
    }

    void trace_components() {
        std::vector<char> seen(static_cast<std::size_t>(4 * crossing_count()), 0);
        for (int x = 0; x < crossing_count(); ++x) {
            for (int p = 0; p < 4; ++p) {
                if (seen[static_cast<std::size_t>(dart_id({x, p}))]) continue;
                std::vector<Dart> cyc;
                Dart d{x, p};
                while (!seen[static_cast<std::size_t>(dart_id(d))]) {
                    seen[static_cast<std::size_t>(dart_id(d))] = 1;
                    const Dart exit{d.x, (d.p + 2) % 4};
                    seen[static_cast<std::size_t>(dart_id(exit))] = 1;
                    cyc.push_back(d);
                    d = twin(exit);
                }
                components_.push_back(std::move(cyc));
            }
        }
    }

    std::vector<std::array<int, 4>> crossings_;
    std::vector<Dart> twin_;
    std::vector<std::vector<Dart>> components_;
};

/// Parse "X(a,b,c,d),X(e,f,g,h),..." (whitespace ignored) into a validated
/// diagram.  Quadruples list edge labels counterclockwise starting from the
/// incoming under-strand.
inline LinkDiagram parse_pd(std::string_view text) {
    std::vector<std::array<int, 4>> quads;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c) {
            throw parse_error(std::string("expected '") + c + "' at position " + std::to_string(i));
        }
        ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw parse_error("expected integer at position " + std::to_string(start));
        long v = 0;
        for (std::size_t k = start; k < i; ++k) {
            v = v * 10 + (text[k] - '0');
            if (v > 1'000'000'000L) throw parse_error("edge label too large");
        }
        return static_cast<int>(v);
    };

    skip_ws();
    if (i >= text.size()) throw parse_error("empty diagram");
    while (true) {
        skip_ws();
        if (i >= text.size() || (text[i] != 'X' && text[i] != 'x')) {
            throw parse_error("expected 'X' at position " + std::to_string(i));
        }
        ++i;
        expect('(');
        std::array<int, 4> q{};
        for (int k = 0; k < 4; ++k) {
            if (k > 0) expect(',');
            q[static_cast<std::size_t>(k)] = read_int();
        }
        expect(')');
        quads.push_back(q);
        skip_ws();
        if (i >= text.size()) break;
        expect(',');
    }
    return LinkDiagram(std::move(quads));
}

/// True iff along every component the crossings strictly alternate between
/// over and under passages (slot parity: even = under).
inline bool is_alternating(const LinkDiagram& d) {
    for (const auto& cyc : d.components()) {
        const std::size_t n = cyc.size();
        for (std::size_t i = 0; i < n; ++i) {
            const int a = cyc[i].p % 2;
            const int b = cyc[(i + 1) % n].p % 2;
            if (a == b) return false;
        }
    }
    return true;
}

}  // namespace knotvol
