#pragma once

#include <map>
#include <string>
#include <vector>

#include "teich/mat2.hpp"
#include "teich/torus.hpp"

namespace teich {

struct SlotRef {
    int pants = 0;
    int slot = 0; // 0..2
    bool operator==(const SlotRef& o) const { return pants == o.pants && slot == o.slot; }
    bool operator<(const SlotRef& o) const { return pants != o.pants ? pants < o.pants : slot < o.slot; }
    std::string str() const { return "p" + std::to_string(pants) + ".s" + std::to_string(slot); }
};

struct Gluing {
    SlotRef a, b;
    int curve = 0; // interior curve index
};

struct BoundaryAssignment {
    SlotRef slot;
    int index = 0; // boundary curve index
};

// Gluing graph of pairs of pants.  Every slot belongs to exactly one
// gluing or one boundary assignment, and the graph is connected.
struct PantsDecomp {
    int n_pants = 0;
    std::vector<Gluing> gluings;
    std::vector<BoundaryAssignment> boundary_slots;

    int n_curves() const { return static_cast<int>(gluings.size()); }
    int n_boundary() const { return static_cast<int>(boundary_slots.size()); }
    void validate() const;

    // one pants, slots 0 and 1 glued, slot 2 boundary: the one-holed torus
    static PantsDecomp one_holed_torus();
    // two pants glued along three curves: closed genus two
    static PantsDecomp genus_two();

    static PantsDecomp from_json(const std::string& text);
    std::string to_json() const;
};

// Fenchel-Nielsen coordinates on a PantsDecomp.
struct FNPoint {
    std::vector<double> lengths; // interior, > 0
    std::vector<double> twists;
    std::vector<double> boundary; // >= 0, 0 = cusp

    void validate(const PantsDecomp& d) const;
    static FNPoint from_json(const std::string& text);
    std::string to_json() const;
};

// Standalone pants representation on the free group <x1, x2> with cuff
// classes x1, x2, (x1 x2)^-1 of lengths l1, l2, l3:
//   x1 = diag(e^{l1/2}, e^{-l1/2});
//   x2 solved from tr x2 = 2 cosh(l2/2), tr(x1 x2) = -2 cosh(l3/2),
//   det x2 = 1 with opposite off-diagonal entries.
// A zero length makes that cuff the parabolic limit block (trace 2).
struct PantsRep {
    Mat2 x1, x2;
    Mat2 cuff(int slot) const; // 0 -> x1, 1 -> x2, 2 -> (x1 x2)^-1
};
PantsRep build_pants_rep(double l1, double l2, double l3);

// Holonomy of the glued surface.  Generators: "pK.a", "pK.b" for the
// pants blocks and "gI" for each gluing that closes a loop (I = its
// curve index).  Words are whitespace-separated generator names with
// an optional ^-1.
struct GluedRep {
    struct Generator {
        std::string name;
        Mat2 m;
    };
    std::vector<Generator> generators;
    std::vector<std::string> curve_words;    // canonical word per interior curve
    std::vector<std::string> boundary_words; // canonical word per boundary index
    std::vector<double> curve_lengths;       // FN targets the words must realize
    std::vector<double> boundary_lengths;

    const Mat2& generator(const std::string& name) const;
    ScaledMat2 evaluate(const std::string& word) const;
    // translation length of the word; Elliptic error on elliptic classes
    double word_length(const std::string& word) const;
    // substitute two generators for the A/B letters of a torus word
    std::string word_from_letters(const std::string& letters, const std::string& a_name,
                                  const std::string& b_name) const;

    // largest defect over all per-curve and per-boundary trace
    // conditions, both sides of every gluing
    double max_trace_residual() const;
};

GluedRep build_glued_rep(const PantsDecomp& d, const FNPoint& x);

} // namespace teich
