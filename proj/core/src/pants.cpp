#include "teich/pants.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "teich/errors.hpp"
#include "teich/geodesic.hpp"
#include "teich/numeric.hpp"

namespace teich {

// ---------------------------------------------------------------- graph

void PantsDecomp::validate() const {
    if (n_pants < 1) raise(ErrorKind::BadInput, "decomposition needs at least one pants");
    std::set<SlotRef> seen;
    auto touch = [&](const SlotRef& s) {
        if (s.pants < 0 || s.pants >= n_pants || s.slot < 0 || s.slot > 2)
            raise(ErrorKind::BadInput, "slot out of range: " + s.str());
        if (!seen.insert(s).second) raise(ErrorKind::BadInput, "slot used twice: " + s.str());
    };
    std::set<int> curves, bnds;
    for (const Gluing& g : gluings) {
        touch(g.a);
        touch(g.b);
        if (!curves.insert(g.curve).second)
            raise(ErrorKind::BadInput, "duplicate curve index " + std::to_string(g.curve));
    }
    for (const BoundaryAssignment& b : boundary_slots) {
        touch(b.slot);
        if (!bnds.insert(b.index).second)
            raise(ErrorKind::BadInput, "duplicate boundary index " + std::to_string(b.index));
    }
    if (static_cast<int>(seen.size()) != 3 * n_pants)
        raise(ErrorKind::BadInput, "every slot needs exactly one gluing or boundary assignment");
    for (int i = 0; i < n_curves(); ++i)
        if (!curves.count(i)) raise(ErrorKind::BadInput, "curve indices must be 0..n_curves-1");
    for (int i = 0; i < n_boundary(); ++i)
        if (!bnds.count(i)) raise(ErrorKind::BadInput, "boundary indices must be 0..n_boundary-1");
    // connectivity over the gluing graph
    std::vector<bool> visited(n_pants, false);
    std::queue<int> todo;
    todo.push(0);
    visited[0] = true;
    while (!todo.empty()) {
        int p = todo.front();
        todo.pop();
        for (const Gluing& g : gluings) {
            for (int q : {g.a.pants, g.b.pants}) {
                if ((g.a.pants == p || g.b.pants == p) && !visited[q]) {
                    visited[q] = true;
                    todo.push(q);
                }
            }
        }
    }
    for (bool v : visited)
        if (!v) raise(ErrorKind::BadInput, "gluing graph is disconnected");
}

PantsDecomp PantsDecomp::one_holed_torus() {
    PantsDecomp d;
    d.n_pants = 1;
    d.gluings = {{{0, 0}, {0, 1}, 0}};
    d.boundary_slots = {{{0, 2}, 0}};
    return d;
}

PantsDecomp PantsDecomp::genus_two() {
    PantsDecomp d;
    d.n_pants = 2;
    d.gluings = {{{0, 0}, {1, 0}, 0}, {{0, 1}, {1, 1}, 1}, {{0, 2}, {1, 2}, 2}};
    return d;
}

void FNPoint::validate(const PantsDecomp& d) const {
    if (static_cast<int>(lengths.size()) != d.n_curves() ||
        static_cast<int>(twists.size()) != d.n_curves() ||
        static_cast<int>(boundary.size()) != d.n_boundary())
        raise(ErrorKind::BadInput, "coordinate vectors do not match the decomposition");
    for (double l : lengths)
        if (!(l > 0.0) || !std::isfinite(l))
            raise(ErrorKind::Domain, "interior curve lengths must be positive");
    for (double t : twists)
        if (!std::isfinite(t)) raise(ErrorKind::Domain, "twists must be finite");
    for (double l : boundary)
        if (!(l >= 0.0) || !std::isfinite(l))
            raise(ErrorKind::Domain, "boundary lengths must be >= 0");
}

// ------------------------------------------------------------------ json

namespace {

using nlohmann::json;

SlotRef slot_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) raise(ErrorKind::BadInput, "slot must be [pants, slot]");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

PantsDecomp PantsDecomp::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::BadInput, std::string("decomposition JSON: ") + e.what());
    }
    PantsDecomp d;
    try {
        d.n_pants = static_cast<int>(j.at("pants").size());
        for (const auto& g : j.value("gluings", json::array()))
            d.gluings.push_back({slot_from_json(g.at("a")), slot_from_json(g.at("b")),
                                 g.at("curve").get<int>()});
        for (const auto& b : j.value("boundary", json::array()))
            d.boundary_slots.push_back({slot_from_json(b.at("slot")), b.at("index").get<int>()});
    } catch (const json::exception& e) {
        raise(ErrorKind::BadInput, std::string("decomposition JSON: ") + e.what());
    }
    d.validate();
    return d;
}

std::string PantsDecomp::to_json() const {
    json j;
    j["pants"] = json::array();
    for (int i = 0; i < n_pants; ++i) j["pants"].push_back(json::object());
    j["gluings"] = json::array();
    for (const Gluing& g : gluings)
        j["gluings"].push_back({{"a", {g.a.pants, g.a.slot}}, {"b", {g.b.pants, g.b.slot}}, {"curve", g.curve}});
    j["boundary"] = json::array();
    for (const BoundaryAssignment& b : boundary_slots)
        j["boundary"].push_back({{"slot", {b.slot.pants, b.slot.slot}}, {"index", b.index}});
    return j.dump(2);
}

FNPoint FNPoint::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::BadInput, std::string("point JSON: ") + e.what());
    }
    FNPoint x;
    try {
        x.lengths = j.at("lengths").get<std::vector<double>>();
        x.twists = j.at("twists").get<std::vector<double>>();
        x.boundary = j.value("boundary", std::vector<double>{});
    } catch (const json::exception& e) {
        raise(ErrorKind::BadInput, std::string("point JSON: ") + e.what());
    }
    return x;
}

std::string FNPoint::to_json() const {
    json j;
    j["lengths"] = lengths;
    j["twists"] = twists;
    j["boundary"] = boundary;
    return j.dump(2);
}

// ------------------------------------------------------- standalone pants

Mat2 PantsRep::cuff(int slot) const {
    switch (slot) {
    case 0: return x1;
    case 1: return x2;
    case 2: return (x1 * x2).inverse();
    }
    raise(ErrorKind::BadInput, "cuff slot must be 0, 1 or 2");
}

PantsRep build_pants_rep(double l1, double l2, double l3) {
    for (double l : {l1, l2, l3})
        if (!(l >= 0.0) || !std::isfinite(l)) raise(ErrorKind::Domain, "cuff lengths must be >= 0");
    if (l1 == 0.0 && l2 == 0.0 && l3 == 0.0) {
        // thrice-punctured sphere: no moduli, fixed parabolic generators
        return {Mat2{1, 2, 0, 1}, Mat2{1, 0, -2, 1}};
    }
    if (l1 == 0.0)
        raise(ErrorKind::Degenerate, "first cuff must have positive length (rotate the cuffs)");
    double a = std::exp(l1 / 2.0);
    double t2 = 2.0 * std::cosh(l2 / 2.0);
    double t3 = 2.0 * std::cosh(l3 / 2.0);
    // linear solve for the diagonal of x2 from tr x2 = t2, tr(x1 x2) = -t3
    double p = -(t3 + t2 / a) / (a - 1.0 / a);
    double s = t2 - p;
    double disc = 1.0 - p * s; // q r = p s - 1 must be negative for disjoint cuffs
    if (disc < 0.0)
        raise(ErrorKind::Degenerate, "no hyperbolic pants with these cuff traces");
    double q = std::sqrt(disc);
    PantsRep rep;
    rep.x1 = Mat2::translation(l1);
    rep.x2 = Mat2{p, q, -q, s};
    return rep;
}

// ------------------------------------------------------------- glued rep

namespace {

constexpr double kTraceTol = 1e-9;

struct Block {
    PantsRep rep;
    int rot = 0;                   // slot s uses built cuff (s - rot) mod 3
    std::array<double, 3> len{};   // slot lengths
    std::array<Mat2, 3> frame{};   // per glued slot
    std::array<bool, 3> framed{false, false, false};

    int built_index(int slot) const { return ((slot - rot) % 3 + 3) % 3; }
    Mat2 cuff(int slot) const { return rep.cuff(built_index(slot)); }

    // canonical cuff word over this block's generators
    std::string cuff_word(int pants_index, int slot) const {
        std::string a = "p" + std::to_string(pants_index) + ".a";
        std::string b = "p" + std::to_string(pants_index) + ".b";
        switch (built_index(slot)) {
        case 0: return a;
        case 1: return b;
        default: return b + "^-1 " + a + "^-1";
        }
    }
};

// foot partner: the lowest-indexed other slot
int foot_partner(int slot) { return slot == 0 ? 1 : 0; }

Mat2 slot_frame(Block& blk, int slot) {
    if (blk.framed[slot]) return blk.frame[slot];
    Mat2 c = blk.cuff(slot);
    OrientedAxis ax = oriented_axis(c);
    int other = foot_partner(slot);
    Mat2 pc = blk.cuff(other);
    double pos;
    if (blk.len[other] == 0.0) {
        pos = axis_position_of_perpendicular(ax, parabolic_fixed_point(pc));
    } else {
        pos = axis_position_of_perpendicular(ax, axis_endpoints(pc));
    }
    Mat2 g = frame_to_axis(ax) * Mat2::translation(pos);
    // the frame must conjugate the cuff to the standard translation
    Mat2 check = g.inverse() * c * g;
    if (!check.approx_equal_projective(Mat2::translation(blk.len[slot]), 1e-7 * std::max(1.0, check.max_abs())))
        raise(ErrorKind::Assembly, "slot frame failed to normalize the cuff");
    blk.frame[slot] = g;
    blk.framed[slot] = true;
    return g;
}

Mat2 plain_product(const GluedRep& rep, const std::string& word) {
    ScaledMat2 acc = rep.evaluate(word);
    if (acc.log_scale != 0.0)
        raise(ErrorKind::Assembly, "validation word overflowed");
    return acc.m;
}

} // namespace

const Mat2& GluedRep::generator(const std::string& name) const {
    for (const Generator& g : generators)
        if (g.name == name) return g.m;
    raise(ErrorKind::BadInput, "unknown generator '" + name + "'");
}

ScaledMat2 GluedRep::evaluate(const std::string& word) const {
    std::istringstream is(word);
    std::string token;
    ScaledMat2 acc;
    bool any = false;
    while (is >> token) {
        any = true;
        bool inv = false;
        if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
            inv = true;
            token = token.substr(0, token.size() - 3);
        }
        Mat2 g = generator(token);
        acc.mul_right(inv ? g.inverse() : g);
    }
    if (!any) raise(ErrorKind::BadInput, "empty word");
    return acc;
}

double GluedRep::word_length(const std::string& word) const {
    return translation_length_from_log_trace(evaluate(word).log_abs_trace());
}

std::string GluedRep::word_from_letters(const std::string& letters, const std::string& a_name,
                                        const std::string& b_name) const {
    std::string out;
    for (char ch : letters) {
        if (!out.empty()) out += ' ';
        switch (ch) {
        case 'A': out += a_name; break;
        case 'a': out += a_name + "^-1"; break;
        case 'B': out += b_name; break;
        case 'b': out += b_name + "^-1"; break;
        default: raise(ErrorKind::BadInput, std::string("bad letter '") + ch + "'");
        }
    }
    return out;
}

double GluedRep::max_trace_residual() const {
    double worst = 0.0;
    auto defect = [&](const std::string& word, double target_len) {
        double target = 2.0 * std::cosh(target_len / 2.0);
        double tr = std::exp(evaluate(word).log_abs_trace());
        worst = std::max(worst, std::fabs(tr - target) / std::max(1.0, target));
    };
    for (size_t i = 0; i < curve_words.size(); ++i) defect(curve_words[i], curve_lengths[i]);
    for (size_t j = 0; j < boundary_words.size(); ++j) defect(boundary_words[j], boundary_lengths[j]);
    return worst;
}

GluedRep build_glued_rep(const PantsDecomp& d, const FNPoint& x) {
    d.validate();
    x.validate(d);

    // per-pants slot lengths
    std::vector<Block> blocks(d.n_pants);
    for (const Gluing& g : d.gluings) {
        blocks[g.a.pants].len[g.a.slot] = x.lengths[g.curve];
        blocks[g.b.pants].len[g.b.slot] = x.lengths[g.curve];
    }
    for (const BoundaryAssignment& b : d.boundary_slots)
        blocks[b.slot.pants].len[b.slot.slot] = x.boundary[b.index];

    for (Block& blk : blocks) {
        // rotate a positive length into the diagonal position
        blk.rot = static_cast<int>(std::max_element(blk.len.begin(), blk.len.end()) - blk.len.begin());
        blk.rep = build_pants_rep(blk.len[blk.rot], blk.len[(blk.rot + 1) % 3],
                                  blk.len[(blk.rot + 2) % 3]);
    }

    const Mat2 flip = Mat2::flip();
    std::vector<Mat2> pframe(d.n_pants);
    std::vector<bool> placed(d.n_pants, false);
    std::vector<bool> is_tree(d.gluings.size(), false);
    placed[0] = true;

    // spanning tree: transport frames across gluings until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t e = 0; e < d.gluings.size(); ++e) {
            const Gluing& g = d.gluings[e];
            SlotRef from = g.a, to = g.b;
            if (placed[from.pants] == placed[to.pants]) continue;
            if (!placed[from.pants]) std::swap(from, to);
            Mat2 ga = slot_frame(blocks[from.pants], from.slot);
            Mat2 gb = slot_frame(blocks[to.pants], to.slot);
            pframe[to.pants] = pframe[from.pants] * ga * Mat2::translation(x.twists[g.curve]) *
                               flip * gb.inverse();
            placed[to.pants] = true;
            is_tree[e] = true;
            changed = true;
        }
    }

    GluedRep rep;
    for (int p = 0; p < d.n_pants; ++p) {
        const Mat2& f = pframe[p];
        Mat2 fi = f.inverse();
        rep.generators.push_back({"p" + std::to_string(p) + ".a", f * blocks[p].rep.x1 * fi});
        rep.generators.push_back({"p" + std::to_string(p) + ".b", f * blocks[p].rep.x2 * fi});
    }
    for (size_t e = 0; e < d.gluings.size(); ++e) {
        if (is_tree[e]) continue;
        const Gluing& g = d.gluings[e];
        Mat2 ga = slot_frame(blocks[g.a.pants], g.a.slot);
        Mat2 gb = slot_frame(blocks[g.b.pants], g.b.slot);
        Mat2 t = pframe[g.a.pants] * ga * Mat2::translation(x.twists[g.curve]) * flip *
                 gb.inverse() * pframe[g.b.pants].inverse();
        rep.generators.push_back({"g" + std::to_string(g.curve), t.det_normalized()});
    }

    rep.curve_words.resize(d.gluings.size());
    rep.curve_lengths.resize(d.gluings.size());
    for (const Gluing& g : d.gluings) {
        rep.curve_words[g.curve] = blocks[g.a.pants].cuff_word(g.a.pants, g.a.slot);
        rep.curve_lengths[g.curve] = x.lengths[g.curve];
    }
    rep.boundary_words.resize(d.boundary_slots.size());
    rep.boundary_lengths.resize(d.boundary_slots.size());
    for (const BoundaryAssignment& b : d.boundary_slots) {
        rep.boundary_words[b.index] = blocks[b.slot.pants].cuff_word(b.slot.pants, b.slot.slot);
        rep.boundary_lengths[b.index] = x.boundary[b.index];
    }

    // ---- invariant suite: trace conditions and gluing relations ----
    auto check_trace = [&](const std::string& word, double len, const SlotRef& where) {
        double target = 2.0 * std::cosh(len / 2.0);
        double tr = std::exp(rep.evaluate(word).log_abs_trace());
        if (std::fabs(tr - target) > kTraceTol * std::max(1.0, target))
            raise(ErrorKind::Assembly, "trace condition failed at " + where.str() + ": |tr| = " +
                                           std::to_string(tr) + ", want " + std::to_string(target));
    };
    for (const Gluing& g : d.gluings) {
        check_trace(blocks[g.a.pants].cuff_word(g.a.pants, g.a.slot), x.lengths[g.curve], g.a);
        check_trace(blocks[g.b.pants].cuff_word(g.b.pants, g.b.slot), x.lengths[g.curve], g.b);
    }
    for (const BoundaryAssignment& b : d.boundary_slots)
        check_trace(blocks[b.slot.pants].cuff_word(b.slot.pants, b.slot.slot), x.boundary[b.index],
                    b.slot);
    for (size_t e = 0; e < d.gluings.size(); ++e) {
        const Gluing& g = d.gluings[e];
        Mat2 ma = plain_product(rep, blocks[g.a.pants].cuff_word(g.a.pants, g.a.slot));
        Mat2 mb = plain_product(rep, blocks[g.b.pants].cuff_word(g.b.pants, g.b.slot));
        Mat2 lhs = mb;
        if (!is_tree[e]) {
            const Mat2& t = rep.generator("g" + std::to_string(g.curve));
            lhs = t * mb * t.inverse();
        }
        Mat2 rhs = ma.inverse();
        double scale = std::max(1.0, rhs.max_abs());
        if (!lhs.approx_equal_projective(rhs, 1e-8 * scale))
            raise(ErrorKind::Assembly, "gluing relation failed at " + g.a.str() + " ~ " + g.b.str());
    }
    return rep;
}

} // namespace teich
