#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "knotvol/pd.hpp"

namespace knotvol {

/// One complementary region of the projection sphere.  `sides` are the darts
/// whose edge-side borders the face, in traversal order; `corners` the
/// (crossing, slot) corners it occupies, where corner (x,k) lies between
/// slots k and k+1.
struct Face {
    std::vector<Dart> sides;
    std::vector<Dart> corners;

    int size() const { return static_cast<int>(sides.size()); }
};

/// Incidences of one edge: the two faces it separates and, per the collapse
/// rule, the four corner faces flanking its endpoints (with multiplicity).
struct EdgeIncidence {
    int label = 0;
    int face_a = -1;
    int face_b = -1;
    std::array<int, 4> flankers{};
};

/// Complementary-region decomposition of a diagram on the sphere.  No face is
/// privileged as the outer one.
struct FaceDecomposition {
    std::vector<Face> faces;
    std::map<int, int> b;                       ///< b[i] = number of faces with i edges
    std::vector<std::array<int, 4>> corner_face;  ///< per crossing: face at corner k
    std::vector<int> dart_face;                 ///< face on the side of each dart (by dart_id)
    std::set<std::pair<int, int>> adjacent;     ///< face pairs sharing >= 1 edge (a < b)
    std::vector<EdgeIncidence> edges;

    int face_count() const { return static_cast<int>(faces.size()); }

    bool is_adjacent(int f, int g) const {
        if (f > g) std::swap(f, g);
        return adjacent.count({f, g}) > 0;
    }

    int face_size(int f) const { return faces[static_cast<std::size_t>(f)].size(); }
};

/// Traverse the rotation system: faces are the orbits of dart -> rotate(twin).
/// Validates the sphere Euler count (c + 2 faces, corner totals).
inline FaceDecomposition compute_faces(const LinkDiagram& d) {
    const int c = d.crossing_count();
    FaceDecomposition out;
    out.dart_face.assign(static_cast<std::size_t>(4 * c), -1);
    out.corner_face.assign(static_cast<std::size_t>(c), {-1, -1, -1, -1});

    for (int x = 0; x < c; ++x) {
        for (int p = 0; p < 4; ++p) {
            if (out.dart_face[static_cast<std::size_t>(dart_id({x, p}))] >= 0) continue;
            const int fid = out.face_count();
            Face face;
            Dart cur{x, p};
            while (out.dart_face[static_cast<std::size_t>(dart_id(cur))] < 0) {
                out.dart_face[static_cast<std::size_t>(dart_id(cur))] = fid;
                face.sides.push_back(cur);
                const Dart t = d.twin(cur);
                face.corners.push_back(t);
                cur = Dart{t.x, (t.p + 1) % 4};
            }
            for (const Dart& corner : face.corners) {
                auto& slot = out.corner_face[static_cast<std::size_t>(corner.x)][static_cast<std::size_t>(corner.p)];
                if (slot >= 0) throw diagram_error("face traversal visited a corner twice");
                slot = fid;
            }
            out.faces.push_back(std::move(face));
        }
    }

    if (out.face_count() != c + 2) {
        throw diagram_error("face count " + std::to_string(out.face_count()) +
                            " != crossings + 2; the rotation system is not spherical");
    }
    for (const auto& corners : out.corner_face) {
        for (int f : corners) {
            if (f < 0) throw diagram_error("face traversal missed a corner");
        }
    }

    for (const Face& f : out.faces) ++out.b[f.size()];

    // edge incidences: the edge-end at slot p is bordered by corners (p-1, p);
    // the two other corners (p+1, p+2) flank it
    std::set<int> done;
    for (int x = 0; x < c; ++x) {
        for (int p = 0; p < 4; ++p) {
            const Dart d1{x, p};
            const int label = d.label(d1);
            if (!done.insert(label).second) continue;
            const Dart d2 = d.twin(d1);
            EdgeIncidence e;
            e.label = label;
            e.face_a = out.dart_face[static_cast<std::size_t>(dart_id(d1))];
            e.face_b = out.dart_face[static_cast<std::size_t>(dart_id(d2))];
            int k = 0;
            for (const Dart& end : {d1, d2}) {
                const auto& cf = out.corner_face[static_cast<std::size_t>(end.x)];
                e.flankers[static_cast<std::size_t>(k++)] = cf[static_cast<std::size_t>((end.p + 1) % 4)];
                e.flankers[static_cast<std::size_t>(k++)] = cf[static_cast<std::size_t>((end.p + 2) % 4)];
            }
            if (e.face_a != e.face_b) {
                out.adjacent.insert({std::min(e.face_a, e.face_b), std::max(e.face_a, e.face_b)});
            }
            out.edges.push_back(e);
        }
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const EdgeIncidence& a, const EdgeIncidence& b) { return a.label < b.label; });
    return out;
}

struct ReducednessReport {
    bool reduced = true;
    std::vector<int> offenders;  ///< crossings with the same face at opposite corners
};

/// A crossing is nugatory when one face occupies two of its opposite corners;
/// such a crossing dies to a Reidemeister I/II move (or a separating circle).
inline ReducednessReport reducedness_check(const LinkDiagram& d, const FaceDecomposition& f) {
    ReducednessReport rep;
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& cf = f.corner_face[static_cast<std::size_t>(x)];
        if (cf[0] == cf[2] || cf[1] == cf[3]) {
            rep.reduced = false;
            rep.offenders.push_back(x);
        }
    }
    return rep;
}

/// The standard Borromean-rings projection: 6 crossings, 3 components,
/// alternating, and all 8 complementary regions triangles.
inline bool borromean_detect(const LinkDiagram& d, const FaceDecomposition& f) {
    if (d.crossing_count() != 6 || d.component_count() != 3) return false;
    if (!is_alternating(d)) return false;
    auto it = f.b.find(3);
    return it != f.b.end() && it->second == 8;
}

}  // namespace knotvol
