#include "cartankit/family.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "cartankit/errors.hpp"

namespace cartankit {

bool is_simple_lie(Family f) {
    switch (f) {
        case Family::A: case Family::B: case Family::C: case Family::D:
        case Family::E6: case Family::E7: case Family::E8:
        case Family::F4: case Family::G2:
            return true;
        default:
            return false;
    }
}

bool is_super(Family f) {
    switch (f) {
        case Family::SuperA: case Family::SuperB: case Family::SuperB0:
        case Family::SuperC: case Family::SuperD:
        case Family::D21Alpha: case Family::SuperF4: case Family::SuperG3:
            return true;
        default:
            return false;
    }
}

bool is_exceptional(Family f) {
    switch (f) {
        case Family::E6: case Family::E7: case Family::E8:
        case Family::F4: case Family::G2:
        case Family::D21Alpha: case Family::SuperF4: case Family::SuperG3:
            return true;
        default:
            return false;
    }
}

void validate(const FamilySpec& spec) {
    const long m = spec.m;
    const long n = spec.n;
    auto require = [&](bool ok, const std::string& why) {
        if (!ok) throw InvalidParams(family_name(spec.family) + ": " + why);
    };
    switch (spec.family) {
        case Family::A: require(n >= 1, "requires n >= 1"); break;
        case Family::B: require(n >= 2, "requires n >= 2"); break;
        case Family::C: require(n >= 2, "requires n >= 2"); break;
        case Family::D: require(n >= 2, "requires n >= 2"); break;
        case Family::S: require(n >= 1, "requires n >= 1"); break;
        case Family::R: require(n >= 2, "requires n >= 2"); break;
        case Family::SuperA:
            require(m >= 0 && n >= 0, "requires m, n >= 0");
            require(m != n, "A(n,n) rejected: its Cartan matrix is singular");
            break;
        case Family::SuperB: require(m >= 1 && n >= 1, "requires m, n >= 1"); break;
        case Family::SuperB0: require(n >= 2, "requires n >= 2"); break;
        case Family::SuperC: require(n >= 2, "requires n >= 2"); break;
        case Family::SuperD: require(m >= 2 && n >= 1, "requires m >= 2, n >= 1"); break;
        case Family::D21Alpha:
            require(spec.alpha.has_value(), "requires alpha");
            require(*spec.alpha != 0 && *spec.alpha != -1, "requires alpha not in {0, -1}");
            break;
        case Family::E6: case Family::E7: case Family::E8:
        case Family::F4: case Family::G2:
        case Family::SuperF4: case Family::SuperG3:
            break;
    }
}

std::size_t size_of(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::A: case Family::B: case Family::C:
        case Family::D: case Family::S: case Family::R:
        case Family::SuperB0: case Family::SuperC:
            return static_cast<std::size_t>(spec.n);
        case Family::SuperA: return static_cast<std::size_t>(spec.m + spec.n + 1);
        case Family::SuperB: case Family::SuperD:
            return static_cast<std::size_t>(spec.m + spec.n);
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::F4: case Family::SuperF4: return 4;
        case Family::G2: return 2;
        case Family::D21Alpha: case Family::SuperG3: return 3;
    }
    throw InvalidParams("unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::S: return "S";
        case Family::R: return "R";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
        case Family::SuperA: return "superA";
        case Family::SuperB: return "superB";
        case Family::SuperB0: return "superB0";
        case Family::SuperC: return "superC";
        case Family::SuperD: return "superD";
        case Family::D21Alpha: return "D21alpha";
        case Family::SuperF4: return "superF4";
        case Family::SuperG3: return "superG3";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    static const std::unordered_map<std::string, Family> table = {
        {"a", Family::A}, {"b", Family::B}, {"c", Family::C}, {"d", Family::D},
        {"s", Family::S}, {"r", Family::R},
        {"e6", Family::E6}, {"e7", Family::E7}, {"e8", Family::E8},
        {"f4", Family::F4}, {"g2", Family::G2},
        {"supera", Family::SuperA}, {"superb", Family::SuperB},
        {"superb0", Family::SuperB0}, {"superc", Family::SuperC},
        {"superd", Family::SuperD},
        {"d21alpha", Family::D21Alpha}, {"superf4", Family::SuperF4},
        {"superg3", Family::SuperG3},
    };
    auto it = table.find(key);
    if (it == table.end()) throw InvalidParams("unknown family '" + name + "'");
    return it->second;
}

std::string describe(const FamilySpec& spec) {
    std::string s = family_name(spec.family);
    switch (spec.family) {
        case Family::A: case Family::B: case Family::C: case Family::D:
        case Family::S: case Family::R:
        case Family::SuperB0: case Family::SuperC:
            s += "(n=" + std::to_string(spec.n) + ")";
            break;
        case Family::SuperA: case Family::SuperB: case Family::SuperD:
            s += "(m=" + std::to_string(spec.m) + ",n=" + std::to_string(spec.n) + ")";
            break;
        case Family::D21Alpha:
            s += "(alpha=" + (spec.alpha ? to_string(*spec.alpha) : std::string("?")) + ")";
            break;
        default:
            break;
    }
    return s;
}

} // namespace cartankit
