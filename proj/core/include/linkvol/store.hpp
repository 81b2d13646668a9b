#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace linkvol {

struct VolumeRecord {
    std::string key;      // canonical symbol
    double volume = 0.0;
    double residual = 0.0;
    unsigned solver_seed = 0;
    enum class Source { Computed, Reference } source = Source::Computed;
};

// Read-through cache keyed by canonical Conway symbol. Reference rows are
// never overwritten by computed rows. Persistence is a JSON-lines file in
// the directory named by LINKVOL_CACHE (in-memory only when unset).
class VolumeStore {
  public:
    VolumeStore();                       // uses LINKVOL_CACHE when set
    explicit VolumeStore(std::string cache_dir);

    std::optional<VolumeRecord> get(const std::string& key) const;
    void put(const VolumeRecord& rec);
    int load_reference_csv(const std::string& path);
    int load_reference_rows(const std::vector<std::pair<std::string, double>>& rows);

    // keys where |computed - reference| exceeds tol
    std::vector<std::string> mismatches(double tol = 1e-5) const;
    std::size_t size() const;

  private:
    void persist(const VolumeRecord& rec);
    void load_cache_file();

    mutable std::mutex mu_;
    std::map<std::string, VolumeRecord> computed_;
    std::map<std::string, VolumeRecord> reference_;
    std::string file_;
};

}  // namespace linkvol
