#include "k4/rodegree.hpp"

#include <cctype>

namespace k4 {

std::string RODegree::to_string() const {
    std::string s;
    auto term = [&](int k, const char* name) {
        if (k == 0) return;
        if (!s.empty()) s += k > 0 ? "+" : "-";
        else if (k < 0) s += "-";
        int a = k < 0 ? -k : k;
        if (*name == 0) {
            s += std::to_string(a);
        } else {
            if (a != 1) s += std::to_string(a) + "*";
            s += name;
        }
    };
    term(c1, "");
    term(a0, "A0");
    term(a1, "A1");
    term(b, "B");
    return s.empty() ? "0" : s;
}

std::string RODegree::to_csv() const {
    return std::to_string(c1) + "," + std::to_string(a0) + "," + std::to_string(a1) + "," + std::to_string(b);
}

namespace {

RODegree parse_csv(const std::string& s) {
    std::array<int, 4> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t end = s.find(',', pos);
        if ((end == std::string::npos) != (i == 3)) throw DegreeError("degree needs four comma-separated integers: " + s);
        std::string part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        try {
            std::size_t used = 0;
            v[i] = std::stoi(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
            if (used != part.size()) throw DegreeError("bad integer in degree: " + part);
        } catch (const std::logic_error&) {
            throw DegreeError("bad integer in degree: " + part);
        }
        pos = end + 1;
    }
    return {v[0], v[1], v[2], v[3]};
}

RODegree parse_linear(const std::string& src) {
    std::string s;
    for (char c : src)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DegreeError("empty degree");
    RODegree d;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw DegreeError("expected + or - in degree: " + src);
        }
        int coef = 1;
        bool have_num = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stoi(s.substr(i, j - i));
            have_num = true;
            i = j;
        }
        if (i < s.size() && s[i] == '*') {
            if (!have_num) throw DegreeError("dangling * in degree: " + src);
            ++i;
        }
        RODegree unit = kOne;
        if (s.compare(i, 2, "A0") == 0) {
            unit = kA0;
            i += 2;
        } else if (s.compare(i, 2, "A1") == 0) {
            unit = kA1;
            i += 2;
        } else if (i < s.size() && s[i] == 'B') {
            unit = kB;
            i += 1;
        } else if (!have_num) {
            throw DegreeError("unrecognised degree term in: " + src);
        }
        d += unit * (sign * coef);
    }
    return d;
}

}  // namespace

RODegree RODegree::parse(const std::string& s) {
    if (s.find(',') != std::string::npos) return parse_csv(s);
    return parse_linear(s);
}

std::vector<RODegree> degree_box(int k) {
    if (k < 0) throw DegreeError("box radius must be nonnegative");
    std::vector<RODegree> out;
    for (int c = -k; c <= k; ++c)
        for (int x = -k; x <= k; ++x)
            for (int y = -k; y <= k; ++y)
                for (int z = -k; z <= k; ++z) out.push_back({c, x, y, z});
    return out;
}

void to_json(nlohmann::json& j, const RODegree& d) { j = nlohmann::json::array({d.c1, d.a0, d.a1, d.b}); }

void from_json(const nlohmann::json& j, RODegree& d) {
    if (j.is_string()) {
        d = RODegree::parse(j.get<std::string>());
        return;
    }
    if (!j.is_array() || j.size() != 4) throw DegreeError("degree must be a 4-element array or a string");
    d = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

}  // namespace k4
