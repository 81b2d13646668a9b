#include "linkvol/store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "linkvol/conway.hpp"

namespace linkvol {

VolumeStore::VolumeStore() {
    const char* dir = std::getenv("LINKVOL_CACHE");
    if (dir && *dir) {
        file_ = std::string(dir) + "/volumes.jsonl";
        load_cache_file();
    }
}

VolumeStore::VolumeStore(std::string cache_dir) {
    if (!cache_dir.empty()) {
        file_ = cache_dir + "/volumes.jsonl";
        load_cache_file();
    }
}

void VolumeStore::load_cache_file() {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            VolumeRecord r;
            r.key = j.at("key").get<std::string>();
            r.volume = j.at("volume").get<double>();
            r.residual = j.value("residual", 0.0);
            r.solver_seed = j.value("seed", 0u);
            r.source = j.value("source", std::string("computed")) == "reference"
                           ? VolumeRecord::Source::Reference
                           : VolumeRecord::Source::Computed;
            (r.source == VolumeRecord::Source::Reference ? reference_ : computed_)
                .insert_or_assign(r.key, r);
        } catch (...) {
            // skip malformed lines
        }
    }
}

void VolumeStore::persist(const VolumeRecord& rec) {
    if (file_.empty()) return;
    nlohmann::json j{
        {"key", rec.key},
        {"volume", rec.volume},
        {"residual", rec.residual},
        {"seed", rec.solver_seed},
        {"source", rec.source == VolumeRecord::Source::Reference ? "reference" : "computed"},
    };
    std::ofstream out(file_, std::ios::app);
    out << j.dump() << '\n';
}

std::optional<VolumeRecord> VolumeStore::get(const std::string& key) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = reference_.find(key); it != reference_.end()) return it->second;
    if (auto it = computed_.find(key); it != computed_.end()) return it->second;
    return std::nullopt;
}

void VolumeStore::put(const VolumeRecord& rec) {
    std::lock_guard<std::mutex> lk(mu_);
    if (rec.source == VolumeRecord::Source::Reference) {
        reference_.insert_or_assign(rec.key, rec);
    } else {
        if (reference_.count(rec.key)) return;  // reference rows win
        computed_.insert_or_assign(rec.key, rec);
    }
    persist(rec);
}

int VolumeStore::load_reference_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed reference row: " + line);
        std::string sym = line.substr(0, comma);
        double vol;
        try {
            vol = std::stod(line.substr(comma + 1));
        } catch (...) {
            throw std::runtime_error("malformed reference row: " + line);
        }
        VolumeRecord r;
        r.key = canonical(sym);
        r.volume = vol;
        r.source = VolumeRecord::Source::Reference;
        put(r);
        ++count;
    }
    return count;
}

int VolumeStore::load_reference_rows(
    const std::vector<std::pair<std::string, double>>& rows) {
    int count = 0;
    for (const auto& [sym, vol] : rows) {
        VolumeRecord r;
        r.key = canonical(sym);
        r.volume = vol;
        r.source = VolumeRecord::Source::Reference;
        put(r);
        ++count;
    }
    return count;
}

std::vector<std::string> VolumeStore::mismatches(double tol) const {
    std::lock_guard<std::mutex> lk(mu_);
    std::vector<std::string> out;
    for (const auto& [k, ref] : reference_) {
        auto it = computed_.find(k);
        if (it != computed_.end() && std::abs(it->second.volume - ref.volume) > tol)
            out.push_back(k);
    }
    return out;
}

std::size_t VolumeStore::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return computed_.size() + reference_.size();
}

}  // namespace linkvol
