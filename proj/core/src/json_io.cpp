#include "qpl/json_io.hpp"

namespace qpl {

namespace {

Int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw BadParameter(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<Int>();
}

const json& field(const json& j, const char* key) {
    if (!j.contains(key))
        throw BadParameter(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json to_json(const ExtendedNat& value) {
    if (value.is_infinite()) return json("inf");
    return json(value.value());
}

ExtendedNat extended_nat_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtendedNat::infinity();
        throw BadParameter("extended natural must be an integer or \"inf\"");
    }
    if (!j.is_number_integer())
        throw BadParameter("extended natural must be an integer or \"inf\"");
    return ExtendedNat::finite(j.get<Int>());
}

json to_json(const Arrow& arrow) {
    return json{{"m", arrow.m()},
                {"l", arrow.l()},
                {"p", to_json(arrow.source().p())},
                {"q", to_json(arrow.source().q())}};
}

Arrow arrow_from_json(const json& j) {
    return validate_arrow(int_field(j, "m"), int_field(j, "l"),
                          UnitPoint(extended_nat_from_json(field(j, "p")),
                                    extended_nat_from_json(field(j, "q"))));
}

json to_json(const Scalar& value) {
    return json{{"re", format_rational(value.re())},
                {"im", format_rational(value.im())}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<Int>());
    if (!j.is_object()) throw BadParameter("scalar must be an object or integer");
    Rational re(0), im(0);
    if (j.contains("re")) re = parse_rational(j.at("re").get<std::string>());
    if (j.contains("im")) im = parse_rational(j.at("im").get<std::string>());
    return Scalar(std::move(re), std::move(im));
}

namespace {

json axis_to_json(const std::vector<Scalar>& values, const Scalar& tail) {
    json list = json::array();
    for (const Scalar& v : values) list.push_back(to_json(v));
    return json{{"tail", to_json(tail)}, {"values", std::move(list)}};
}

std::vector<Scalar> axis_values_from_json(const json& j) {
    std::vector<Scalar> out;
    for (const json& v : field(j, "values")) out.push_back(scalar_from_json(v));
    return out;
}

}  // namespace

json to_json(const AlgebraElement& element) {
    json slices = json::array();
    for (const Slice& s : element.slices()) {
        slices.push_back(json{{"m", s.m},
                              {"l", s.l},
                              {"axis1", axis_to_json(s.fn.axis1_values(), s.fn.tail())},
                              {"axis2", axis_to_json(s.fn.axis2_values(), s.fn.tail())},
                              {"corner", to_json(s.fn.corner())}});
    }
    return json{{"slices", std::move(slices)}};
}

AlgebraElement element_from_json(const json& j) {
    std::vector<Slice> slices;
    for (const json& sj : field(j, "slices")) {
        const Int m = int_field(sj, "m"), l = int_field(sj, "l");
        const json& a1 = field(sj, "axis1");
        const json& a2 = field(sj, "axis2");
        const Scalar tail1 = scalar_from_json(field(a1, "tail"));
        const Scalar tail2 = scalar_from_json(field(a2, "tail"));
        const Scalar corner = scalar_from_json(field(sj, "corner"));
        if (tail1 != corner || tail2 != corner)
            throw BadParameter("slice tails and corner value must agree");
        slices.push_back({m, l,
                          SliceFn(std::max<Int>(0, -m), std::max<Int>(0, -l),
                                  axis_values_from_json(a1), axis_values_from_json(a2),
                                  corner)});
    }
    return AlgebraElement::from_slices(std::move(slices));
}

json to_json(const ProjClass& c) {
    switch (c.kind()) {
        case ProjClass::Kind::RankZero:
            return json{{"type", "rank0"}, {"m", c.m()}, {"l", c.l()}};
        case ProjClass::Kind::Positive:
            return json{{"type", "positive"}, {"n", c.n()}, {"j", c.j()}};
        default:
            return json{{"type", "deficient"}, {"n", c.n()}, {"k", c.k()}};
    }
}

ProjClass proj_class_from_json(const json& j) {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "rank0")
        return ProjClass::rank_zero(int_field(j, "m"), int_field(j, "l"));
    if (type == "positive")
        return ProjClass::positive(int_field(j, "n"), int_field(j, "j"));
    if (type == "deficient")
        return ProjClass::deficient(int_field(j, "n"), int_field(j, "k"));
    throw BadParameter("unknown class type \"" + type + "\"");
}

json to_json(const K0Class& k) {
    return json{{"a", k.a}, {"b", k.b}, {"basis", json::array({"e11+0", "Itilde"})}};
}

K0Class k0_from_json(const json& j) {
    return {int_field(j, "a"), int_field(j, "b")};
}

std::string to_string(Geometry g) {
    return geometry_name(g);
}

Geometry geometry_from_string(const std::string& name) {
    if (name == "projline") return Geometry::ProjLine;
    if (name == "podles") return Geometry::PodlesSphere;
    throw BadParameter("geometry must be \"projline\" or \"podles\"");
}

json to_json(const BlockSpec& spec) {
    json entries = json::array();
    for (const Block& b : spec.entries)
        entries.push_back(json{
            {"kind", b.kind == BlockKind::Finite ? "finite" : "cofinite"},
            {"m", b.m},
            {"l", b.l}});
    return json{{"entries", std::move(entries)}};
}

BlockSpec block_spec_from_json(const json& j) {
    BlockSpec spec;
    for (const json& bj : field(j, "entries")) {
        const std::string kind = field(bj, "kind").get<std::string>();
        if (kind != "finite" && kind != "cofinite")
            throw BadParameter("block kind must be \"finite\" or \"cofinite\"");
        const Int m = int_field(bj, "m"), l = int_field(bj, "l");
        if (m < 0 || l < 0) throw BadParameter("block indices must be >= 0");
        spec.entries.push_back(
            {kind == "finite" ? BlockKind::Finite : BlockKind::Cofinite, m, l});
    }
    return spec;
}

json to_json(const Certificate& cert) {
    json moves = json::array();
    for (const Move& move : cert.moves) {
        if (const auto* p = std::get_if<PermuteMove>(&move)) {
            moves.push_back(json{{"type", "permute"}, {"targets", p->targets}});
        } else if (const auto* s = std::get_if<BlockSwapMove>(&move)) {
            moves.push_back(json{{"type", "swap"},
                                 {"entry_a", s->entry_a},
                                 {"leg_a", s->leg_a},
                                 {"entry_b", s->entry_b},
                                 {"leg_b", s->leg_b},
                                 {"size", s->size}});
        } else {
            const auto& sh = std::get<ShiftConjugateMove>(move);
            moves.push_back(json{{"type", "shift"},
                                 {"entry_x", sh.entry_x},
                                 {"entry_y", sh.entry_y},
                                 {"power", sh.power},
                                 {"orientation", sh.adjoint ? "adjoint" : "forward"}});
        }
    }
    return moves;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    if (!j.is_array()) throw BadParameter("certificate must be a move array");
    for (const json& mj : j) {
        const std::string type = field(mj, "type").get<std::string>();
        if (type == "permute") {
            PermuteMove move;
            for (const json& t : field(mj, "targets"))
                move.targets.push_back(t.get<std::size_t>());
            cert.moves.push_back(std::move(move));
        } else if (type == "swap") {
            BlockSwapMove move;
            move.entry_a = static_cast<std::size_t>(int_field(mj, "entry_a"));
            move.leg_a = static_cast<int>(int_field(mj, "leg_a"));
            move.entry_b = static_cast<std::size_t>(int_field(mj, "entry_b"));
            move.leg_b = static_cast<int>(int_field(mj, "leg_b"));
            move.size = int_field(mj, "size");
            cert.moves.push_back(move);
        } else if (type == "shift") {
            ShiftConjugateMove move;
            move.entry_x = static_cast<std::size_t>(int_field(mj, "entry_x"));
            move.entry_y = static_cast<std::size_t>(int_field(mj, "entry_y"));
            move.power = int_field(mj, "power");
            const std::string orientation =
                field(mj, "orientation").get<std::string>();
            if (orientation != "forward" && orientation != "adjoint")
                throw BadParameter("orientation must be \"forward\" or \"adjoint\"");
            move.adjoint = orientation == "adjoint";
            cert.moves.push_back(move);
        } else {
            throw BadParameter("unknown move type \"" + type + "\"");
        }
    }
    return cert;
}

json to_json(const TruncatedOperator& op) {
    json rows = json::array();
    for (const std::complex<double>& v : op.data())
        rows.push_back(json::array({v.real(), v.imag()}));
    return json{{"n", op.truncation()}, {"matrix", std::move(rows)}};
}

}  // namespace qpl
