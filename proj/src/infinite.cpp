#include "cartankit/infinite.hpp"

#include <algorithm>
#include <unordered_map>

#include "cartankit/errors.hpp"

namespace cartankit {

void validate(const InfFamilySpec& spec) {
    switch (spec.family) {
        case InfFamily::SuperAmInf:
            if (spec.m < 0) throw InvalidParams("superAinf: requires m >= 0");
            break;
        case InfFamily::SuperBmInf:
            if (spec.m < 1) throw InvalidParams("superBinf: requires m >= 1");
            break;
        case InfFamily::SuperDmInf:
            if (spec.m < 2) throw InvalidParams("superDinf: requires m >= 2");
            break;
        default:
            break;
    }
}

bool in_index_set(const InfFamilySpec& spec, long label) {
    switch (spec.family) {
        case InfFamily::AInfPos: return label >= 1;
        case InfFamily::AInfNeg: return label <= -1;
        case InfFamily::BInf: return label <= 0;
        case InfFamily::DInf: return label <= 1;
        case InfFamily::SuperAmInf: return label >= 1;
        case InfFamily::SuperAInfInf: return true;
        case InfFamily::SuperBmInf: return label <= spec.m;
        case InfFamily::SuperDmInf: return label <= spec.m;
    }
    return false;
}

std::string inf_family_name(InfFamily f) {
    switch (f) {
        case InfFamily::AInfPos: return "Ainf+";
        case InfFamily::AInfNeg: return "Ainf-";
        case InfFamily::BInf: return "Binf";
        case InfFamily::DInf: return "Dinf";
        case InfFamily::SuperAmInf: return "superAinf";
        case InfFamily::SuperAInfInf: return "superAinfinf";
        case InfFamily::SuperBmInf: return "superBinf";
        case InfFamily::SuperDmInf: return "superDinf";
    }
    return "?";
}

InfFamily inf_family_from_name(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    static const std::unordered_map<std::string, InfFamily> table = {
        {"ainf+", InfFamily::AInfPos}, {"ainfpos", InfFamily::AInfPos},
        {"ainf-", InfFamily::AInfNeg}, {"ainfneg", InfFamily::AInfNeg},
        {"binf", InfFamily::BInf},
        {"dinf", InfFamily::DInf},
        {"superainf", InfFamily::SuperAmInf},
        {"superainfinf", InfFamily::SuperAInfInf},
        {"superbinf", InfFamily::SuperBmInf},
        {"superdinf", InfFamily::SuperDmInf},
    };
    auto it = table.find(key);
    if (it == table.end()) throw InvalidParams("unknown infinite family '" + name + "'");
    return it->second;
}

namespace {

void check_labels(const InfFamilySpec& spec, long i, long j) {
    validate(spec);
    if (!in_index_set(spec, i) || !in_index_set(spec, j))
        throw InvalidParams(inf_family_name(spec.family) + ": label outside index set");
}

long chain_sign_entry(long i, long j, int sign) {
    if (i == j) return 2 * sign;
    if (std::abs(i - j) == 1) return -sign;
    return 0;
}

} // namespace

Rational inf_cartan_entry(const InfFamilySpec& spec, long i, long j) {
    check_labels(spec, i, j);
    const long m = spec.m;
    switch (spec.family) {
        case InfFamily::AInfPos:
        case InfFamily::AInfNeg:
            return chain_sign_entry(i, j, 1);
        case InfFamily::BInf:
            // Short-root convention mirrors finite B_n: a(-1,0) = -2.
            if (i == -1 && j == 0) return -2;
            return chain_sign_entry(i, j, 1);
        case InfFamily::DInf: {
            if (i == j) return 2;
            const long lo = std::min(i, j), hi = std::max(i, j);
            if (lo == 0 && hi == 1) return 0;                 // fork nodes unlinked
            if (hi <= 0 && hi - lo == 1) return -1;           // chain
            if (lo == -1 && (hi == 0 || hi == 1)) return -1;  // fork attachments
            return 0;
        }
        case InfFamily::SuperAmInf: {
            if (i == j) return i < m + 1 ? 2 : (i == m + 1 ? 0 : -2);
            if (std::abs(i - j) != 1) return 0;
            return std::min(i, j) <= m ? -1 : 1;
        }
        case InfFamily::SuperAInfInf: {
            if (i == j) return i < 0 ? 2 : (i == 0 ? 0 : -2);
            if (std::abs(i - j) != 1) return 0;
            return std::min(i, j) <= -1 ? -1 : 1;
        }
        case InfFamily::SuperBmInf: {
            if (i == j) return i < 0 ? -2 : (i == 0 ? 0 : 2);
            if (std::abs(i - j) != 1) return 0;
            const long lo = std::min(i, j);
            if (lo <= -1) return 1;                            // -A_inf part
            if (lo == 0) {                                     // isotropic connection
                if (m == 1 && !spec.literal_blocks && i == 0) return -2;
                return -1;
            }
            if (lo == m - 1 && i == m - 1) return -2;          // short-root double edge
            return -1;
        }
        case InfFamily::SuperDmInf: {
            if (i == j) return i < 0 ? -2 : (i == 0 ? 0 : 2);
            const long lo = std::min(i, j), hi = std::max(i, j);
            if (lo <= -1 && hi - lo == 1) return 1;            // -A_inf part
            if (lo == 0) {                                     // isotropic connection
                if (hi == 1) return -1;
                if (m == 2 && hi == 2 && !spec.literal_blocks) return -1;
                return 0;
            }
            // D_m block: chain 1..m-2, fork nodes m-1 and m on node m-2.
            if (hi - lo == 1 && hi <= m - 2) return -1;
            if (lo == m - 2 && (hi == m - 1 || hi == m)) return -1;
            return 0;
        }
    }
    throw InvalidParams("inf_cartan_entry: unknown family");
}

Rational inf_inverse_entry(const InfFamilySpec& spec, long i, long j) {
    check_labels(spec, i, j);
    const long m = spec.m;
    const long lo = std::min(i, j), hi = std::max(i, j);
    switch (spec.family) {
        case InfFamily::AInfPos:
            return lo;
        case InfFamily::AInfNeg:
            return -hi;                                        // min{-i, -j}
        case InfFamily::BInf:
            if (i == 0) return Rational(j, 2);
            return lo;
        case InfFamily::DInf: {
            if (lo >= 0) {                                     // both fork labels
                if (lo == hi) return Rational(1, 4);
                return Rational(-1, 4);
            }
            if (hi >= 0) return Rational(lo, 2);               // one fork label
            return lo;
        }
        case InfFamily::SuperAmInf: {
            if (hi <= m + 1) return lo;                        // L1 = min
            if (lo <= m + 1) return lo;                        // L2/L3: the finite-side label
            return m + 1 - std::min(lo - (m + 1), hi - (m + 1));
        }
        case InfFamily::SuperAInfInf: {
            if (hi <= 0) return lo - 1;
            if (lo <= 0) return lo - 1;
            return -lo - 1;                                    // -min{i,j} - 1
        }
        case InfFamily::SuperBmInf: {
            // The i = m row takes precedence over the i <= 0 / j <= 0 case.
            if (i == m) return Rational(std::abs(j), 2);
            if (i <= 0 || j <= 0) return -lo;
            return lo;
        }
        case InfFamily::SuperDmInf: {
            if (lo <= 0) {
                if (hi <= m - 2) return -lo;
                return Rational(-lo, 2);                       // hi is m-1 or m
            }
            if (hi <= m - 2) return lo;
            if (lo < m - 1) return Rational(lo, 2);            // hi is m-1 or m
            if (lo == hi) return Rational(m, 4);
            return Rational(m - 2, 4);                         // (m-1, m)
        }
    }
    throw InvalidParams("inf_inverse_entry: unknown family");
}

WindowMatrix materialize(const InfFamilySpec& spec, const Window& window, WindowSide side) {
    validate(spec);
    if (window.lo > window.hi) throw InvalidParams("window: lo > hi");
    std::vector<long> labels;
    for (long l = window.lo; l <= window.hi; ++l)
        if (in_index_set(spec, l)) labels.push_back(l);
    if (labels.empty())
        throw InvalidParams("window does not intersect the family's index set");

    Matrix mat(labels.size(), labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b)
            mat(a, b) = side == WindowSide::Cartan
                            ? inf_cartan_entry(spec, labels[a], labels[b])
                            : inf_inverse_entry(spec, labels[a], labels[b]);
    return {std::move(labels), std::move(mat)};
}

VerificationReport verify_window(const InfFamilySpec& spec, const Window& window) {
    validate(spec);
    if (window.lo > window.hi) throw InvalidParams("window: lo > hi");
    VerificationReport report;

    // All Cartan nonzeros sit within +-2 of the row/column label.
    auto row_sum = [&](long i, long j) {
        Rational s = 0;
        for (long k = i - 2; k <= i + 2; ++k)
            if (in_index_set(spec, k)) s += inf_cartan_entry(spec, i, k) * inf_inverse_entry(spec, k, j);
        return s;
    };
    auto col_sum = [&](long i, long j) {
        Rational s = 0;
        for (long k = j - 2; k <= j + 2; ++k)
            if (in_index_set(spec, k)) s += inf_inverse_entry(spec, i, k) * inf_cartan_entry(spec, k, j);
        return s;
    };

    for (long i = window.lo; i <= window.hi; ++i) {
        if (!in_index_set(spec, i)) continue;
        for (long j = window.lo; j <= window.hi; ++j) {
            if (!in_index_set(spec, j)) continue;
            const Rational expected = i == j ? 1 : 0;
            for (const Rational actual : {row_sum(i, j), col_sum(i, j)}) {
                ++report.checked_pairs;
                if (actual != expected) report.failures.push_back({i, j, expected, actual});
            }
        }
    }
    report.passed = report.failures.empty();
    return report;
}

} // namespace cartankit
