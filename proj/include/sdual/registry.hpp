#pragma once

#include "sdual/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdual {

enum class EvenKind { HolCoord, AntiHolCoord, RealCoord };

struct EvenVariable {
    uint32_t id;
    std::string name;
    EvenKind kind;
    int32_t conjugate_of = -1; // partner id for Hol/AntiHol pairs
};

// Odd generators live in fixed blocks; the block order (then insertion order
// within a block) is the canonical sign-normalization order for monomials:
// abstract epsilons, then form legs (d<coord>), then antiholomorphic form
// legs (db<coord>), then polyvector directions (D<coord>).
enum class OddKind { Abstract = 0, FormLeg = 1, AntiHolForm = 2, PolyvectorDir = 3 };

struct OddGenerator {
    uint32_t id;
    std::string name;
    OddKind kind;
    int32_t coord = -1; // even variable the leg refers to, -1 for Abstract
};

class Registry {
public:
    std::vector<EvenVariable> evens;
    std::vector<OddGenerator> odds;

    uint32_t add_even(const std::string& name, EvenKind kind);
    // Registers name (HolCoord) and name~ (AntiHolCoord), linked.
    std::pair<uint32_t, uint32_t> add_conjugate_pair(const std::string& name);
    uint32_t add_odd(const std::string& name, OddKind kind, int32_t coord = -1);

    std::optional<uint32_t> find_even(const std::string& name) const;
    std::optional<uint32_t> find_odd(const std::string& name) const;
    const EvenVariable& even(uint32_t id) const { return evens.at(id); }
    const OddGenerator& odd(uint32_t id) const { return odds.at(id); }

    std::optional<uint32_t> theta_of(uint32_t even_id) const;     // D<coord>
    std::optional<uint32_t> form_leg_of(uint32_t even_id) const;  // d<coord>
    std::optional<uint32_t> antiform_of(uint32_t even_id) const;  // db<coord>

    std::string even_name(uint32_t id) const { return evens.at(id).name; }
    std::string odd_name(uint32_t id) const { return odds.at(id).name; }

private:
    std::map<std::string, uint32_t> even_by_name_;
    std::map<std::string, uint32_t> odd_by_name_;
    std::map<std::pair<int32_t, int>, uint32_t> odd_by_coord_kind_;
};

enum class Theory { IIB_SUGRA, IIA_SUGRA, M, IIB_CL, IIA_CL, None };

struct AFactor {
    std::vector<std::string> coords; // real coordinates, e.g. x1..x4
};

struct BFactor {
    std::vector<std::string> coords; // holomorphic coordinates in CY order
    bool punctured = false;          // true for a C^x (Laurent) factor
};

// Ordered product of flat A- (de Rham) and B- (Calabi-Yau) factors.
struct BackgroundDescriptor {
    std::vector<AFactor> a_factors;
    std::vector<BFactor> b_factors;
    Theory theory = Theory::None;

    size_t a_dim() const;
    size_t b_dim() const; // complex dimension
    void validate() const;

    // Builds the registry: even variables (A coords as RealCoord, B coords as
    // conjugate pairs) and odd generators in canonical block order.  Abstract
    // odd generators are registered first, in the given order.
    Registry build_registry(const std::vector<std::string>& abstract_odds = {}) const;

    // All B-factor holomorphic coordinates, in factor order.
    std::vector<std::string> b_coords() const;

    // Parses e.g. "R4A x Cx[z] x C[w1,w2]"; "C3B"-style shorthand expands to
    // default names.  Theory dimension bookkeeping validated when set.
    static BackgroundDescriptor parse(const std::string& text, Theory theory = Theory::None);
    std::string str() const;
};

} // namespace sdual
