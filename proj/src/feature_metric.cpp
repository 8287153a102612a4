#include "phonodist/feature_metric.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace phonodist {

namespace {

using FieldMap = std::unordered_map<std::string, double WeightProfile::*>;

const FieldMap& profile_fields() {
    static const FieldMap fields = {
        {"place", &WeightProfile::place},
        {"manner", &WeightProfile::manner},
        {"height", &WeightProfile::height},
        {"voicing", &WeightProfile::voicing},
        {"syllabic", &WeightProfile::syllabic},
        {"nasal", &WeightProfile::nasal},
        {"lateral", &WeightProfile::lateral},
        {"rounded", &WeightProfile::rounded},
        {"sibilant", &WeightProfile::sibilant},
        {"indel_cost", &WeightProfile::indel_cost},
        {"onset_multiplier", &WeightProfile::onset_multiplier},
        {"stress_multiplier", &WeightProfile::stress_multiplier},
    };
    return fields;
}

// Field order for serialization.
constexpr const char* kFieldOrder[] = {
    "place", "manner", "height", "voicing", "syllabic", "nasal",
    "lateral", "rounded", "sibilant", "indel_cost", "onset_multiplier",
    "stress_multiplier",
};

}  // namespace

void WeightProfile::validate() const {
    for (const char* name : kFieldOrder) {
        double v = this->*profile_fields().at(name);
        std::string_view n(name);
        bool multiplier = n.ends_with("multiplier");
        if (multiplier ? !(v > 0) : !(v >= 0)) {
            throw ValidationError(std::string("weight profile: ") + name +
                                  (multiplier ? " must be > 0" : " must be >= 0"));
        }
    }
}

WeightProfile WeightProfile::from_text(std::string_view text) {
    WeightProfile w;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("weight profile line " + std::to_string(line_no) +
                             ": expected key=value");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto it = profile_fields().find(key);
        if (it == profile_fields().end()) {
            throw ParseError("weight profile line " + std::to_string(line_no) +
                             ": unknown key '" + key + "'");
        }
        try {
            w.*(it->second) = std::stod(value);
        } catch (const std::exception&) {
            throw ParseError("weight profile line " + std::to_string(line_no) +
                             ": bad value '" + value + "'");
        }
    }
    w.validate();
    return w;
}

WeightProfile WeightProfile::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight profile: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

std::string WeightProfile::to_text() const {
    std::ostringstream out;
    for (const char* name : kFieldOrder) {
        double v = this->*profile_fields().at(name);
        out << name << '=' << v << '\n';
    }
    return out.str();
}

double phoneme_distance(const FeatureBundle& a, const FeatureBundle& b,
                        const WeightProfile& w) {
    double d = 0;
    if (a.place != b.place) d += w.place;
    if (a.manner != b.manner) d += w.manner;
    if (a.height != b.height) d += w.height;
    if (a.voicing != b.voicing) d += w.voicing;
    if (a.syllabic != b.syllabic) d += w.syllabic;
    if (a.nasal != b.nasal) d += w.nasal;
    if (a.lateral != b.lateral) d += w.lateral;
    if (a.rounded != b.rounded) d += w.rounded;
    if (a.sibilant != b.sibilant) d += w.sibilant;
    return d;
}

double phoneme_distance(const Phoneme& a, const Phoneme& b, const WeightProfile& w) {
    return phoneme_distance(a.features, b.features, w);
}

double position_multiplier(const PhonemeSequence& a, const PhonemeSequence& b,
                           std::size_t i, const WeightProfile& w) {
    double m = 1;
    if (a.entry(i).onset || b.entry(i).onset) m *= w.onset_multiplier;
    if (a.entry(i).stressed || b.entry(i).stressed) m *= w.stress_multiplier;
    return m;
}

double template_distance(const PhonemeSequence& a, const PhonemeSequence& b,
                         const WeightProfile& w, bool normalize) {
    if (a.inventory() != b.inventory()) {
        throw MixedInventoryError("template_distance: sequences use different inventories");
    }
    if (a.size() != b.size()) {
        throw Error("template_distance: length mismatch (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + "); use word_distance for alignment");
    }
    double total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += position_multiplier(a, b, i, w) *
                 phoneme_distance(a.phoneme(i), b.phoneme(i), w);
    }
    if (normalize && a.size() > 0) total /= static_cast<double>(a.size());
    return total;
}

}  // namespace phonodist
