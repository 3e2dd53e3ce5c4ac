#include "sdual/registry.hpp"

#include <sstream>

namespace sdual {

uint32_t Registry::add_even(const std::string& name, EvenKind kind) {
    if (even_by_name_.count(name)) throw error("duplicate even variable: " + name);
    uint32_t id = uint32_t(evens.size());
    evens.push_back({id, name, kind, -1});
    even_by_name_[name] = id;
    return id;
}

std::pair<uint32_t, uint32_t> Registry::add_conjugate_pair(const std::string& name) {
    uint32_t h = add_even(name, EvenKind::HolCoord);
    uint32_t a = add_even(name + "~", EvenKind::AntiHolCoord);
    evens[h].conjugate_of = int32_t(a);
    evens[a].conjugate_of = int32_t(h);
    return {h, a};
}

uint32_t Registry::add_odd(const std::string& name, OddKind kind, int32_t coord) {
    if (odd_by_name_.count(name)) throw error("duplicate odd generator: " + name);
    if (!odds.empty() && int(odds.back().kind) > int(kind))
        throw error("odd generator " + name + " registered out of canonical block order");
    uint32_t id = uint32_t(odds.size());
    odds.push_back({id, name, kind, coord});
    odd_by_name_[name] = id;
    if (coord >= 0) odd_by_coord_kind_[{coord, int(kind)}] = id;
    return id;
}

std::optional<uint32_t> Registry::find_even(const std::string& name) const {
    auto it = even_by_name_.find(name);
    if (it == even_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> Registry::find_odd(const std::string& name) const {
    auto it = odd_by_name_.find(name);
    if (it == odd_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> Registry::theta_of(uint32_t even_id) const {
    auto it = odd_by_coord_kind_.find({int32_t(even_id), int(OddKind::PolyvectorDir)});
    if (it == odd_by_coord_kind_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> Registry::form_leg_of(uint32_t even_id) const {
    auto it = odd_by_coord_kind_.find({int32_t(even_id), int(OddKind::FormLeg)});
    if (it == odd_by_coord_kind_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> Registry::antiform_of(uint32_t even_id) const {
    auto it = odd_by_coord_kind_.find({int32_t(even_id), int(OddKind::AntiHolForm)});
    if (it == odd_by_coord_kind_.end()) return std::nullopt;
    return it->second;
}

size_t BackgroundDescriptor::a_dim() const {
    size_t d = 0;
    for (const auto& f : a_factors) d += f.coords.size();
    return d;
}

size_t BackgroundDescriptor::b_dim() const {
    size_t d = 0;
    for (const auto& f : b_factors) d += f.coords.size();
    return d;
}

void BackgroundDescriptor::validate() const {
    size_t a = a_dim(), b = b_dim();
    switch (theory) {
        case Theory::IIB_SUGRA:
        case Theory::IIB_CL:
            // B-factor complex dimension 2n+1, A-factor dimension 8-4n.
            if (b % 2 != 1) throw error("IIB background needs odd complex B-dimension");
            if (a != 8 - 4 * ((b - 1) / 2))
                throw error("IIB background dimension bookkeeping failed: A=" +
                            std::to_string(a) + " B=" + std::to_string(b));
            break;
        case Theory::IIA_SUGRA:
        case Theory::IIA_CL:
            if (b % 2 != 0) throw error("IIA background needs even complex B-dimension");
            if (a != 10 - 4 * (b / 2))
                throw error("IIA background dimension bookkeeping failed: A=" +
                            std::to_string(a) + " B=" + std::to_string(b));
            break;
        case Theory::M:
            if (a != 7 || b != 2) throw error("M background must have A dim 7, B complex dim 2");
            break;
        case Theory::None:
            break;
    }
}

std::vector<std::string> BackgroundDescriptor::b_coords() const {
    std::vector<std::string> cs;
    for (const auto& f : b_factors)
        for (const auto& c : f.coords) cs.push_back(c);
    return cs;
}

Registry BackgroundDescriptor::build_registry(const std::vector<std::string>& abstract_odds) const {
    Registry reg;
    for (const auto& f : a_factors)
        for (const auto& c : f.coords) reg.add_even(c, EvenKind::RealCoord);
    std::vector<uint32_t> b_ids;
    for (const auto& f : b_factors)
        for (const auto& c : f.coords) b_ids.push_back(reg.add_conjugate_pair(c).first);
    for (const auto& name : abstract_odds) reg.add_odd(name, OddKind::Abstract);
    for (const auto& f : a_factors)
        for (const auto& c : f.coords)
            reg.add_odd("d" + c, OddKind::FormLeg, int32_t(*reg.find_even(c)));
    for (uint32_t id : b_ids) reg.add_odd("d" + reg.even_name(id), OddKind::FormLeg, int32_t(id));
    for (uint32_t id : b_ids)
        reg.add_odd("db" + reg.even_name(id), OddKind::AntiHolForm,
                    reg.even(id).conjugate_of);
    for (uint32_t id : b_ids)
        reg.add_odd("D" + reg.even_name(id), OddKind::PolyvectorDir, int32_t(id));
    return reg;
}

namespace {

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

BackgroundDescriptor BackgroundDescriptor::parse(const std::string& text, Theory theory) {
    BackgroundDescriptor bg;
    bg.theory = theory;
    std::vector<std::string> factors;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'x' && (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == 'R' ||
                               text[i + 1] == 'C') &&
            (i == 0 || text[i - 1] == ' ')) {
            factors.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(text[i]);
        }
    }
    factors.push_back(cur);
    int auto_b = 0;
    for (auto raw : factors) {
        std::string f;
        for (char c : raw)
            if (!isspace(static_cast<unsigned char>(c))) f.push_back(c);
        if (f.empty()) continue;
        auto bracket = f.find('[');
        std::string head = bracket == std::string::npos ? f : f.substr(0, bracket);
        std::vector<std::string> names;
        if (bracket != std::string::npos) {
            auto close = f.find(']', bracket);
            if (close == std::string::npos) throw error("unclosed '[' in background: " + raw);
            names = split_names(f.substr(bracket + 1, close - bracket - 1));
        }
        if (head.size() >= 1 && head[0] == 'R') {
            std::string dims = head.substr(1);
            if (!dims.empty() && dims.back() == 'A') dims.pop_back();
            size_t dim = names.empty() ? std::stoul(dims) : names.size();
            AFactor a;
            if (names.empty())
                for (size_t i = 1; i <= dim; ++i) a.coords.push_back("x" + std::to_string(i));
            else
                a.coords = names;
            bg.a_factors.push_back(a);
        } else if (head == "C" || head == "Cx" || (head.size() > 1 && head[0] == 'C')) {
            BFactor b;
            b.punctured = head.size() >= 2 && head[1] == 'x';
            if (names.empty()) {
                std::string dims = head.substr(b.punctured ? 2 : 1);
                if (!dims.empty() && dims.back() == 'B') dims.pop_back();
                size_t dim = dims.empty() ? 1 : std::stoul(dims);
                static const char* defaults[] = {"z", "w1", "w2", "w3", "w4"};
                for (size_t i = 0; i < dim; ++i)
                    b.coords.push_back(i < 5 ? defaults[i] : "w" + std::to_string(i));
                (void)auto_b;
            } else {
                b.coords = names;
            }
            bg.b_factors.push_back(b);
        } else {
            throw error("unrecognized background factor: " + raw);
        }
    }
    bg.validate();
    return bg;
}

std::string BackgroundDescriptor::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& f : a_factors) {
        if (!first) out << " x ";
        first = false;
        out << "R" << f.coords.size() << "A[";
        for (size_t i = 0; i < f.coords.size(); ++i) out << (i ? "," : "") << f.coords[i];
        out << "]";
    }
    for (const auto& f : b_factors) {
        if (!first) out << " x ";
        first = false;
        out << (f.punctured ? "Cx[" : "C[");
        for (size_t i = 0; i < f.coords.size(); ++i) out << (i ? "," : "") << f.coords[i];
        out << "]";
    }
    return out.str();
}

} // namespace sdual
