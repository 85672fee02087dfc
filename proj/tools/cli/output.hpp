#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace metaopt::cli {

// The files of one run. Every file goes through here so that a failed run
// can take back what it wrote; the manifest is written last by finish().
class OutputSet {
public:
    // Creates the directory; throws std::runtime_error naming it on failure.
    explicit OutputSet(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    const std::vector<std::string>& files() const { return files_; }

    std::ofstream open(const std::string& name);
    void close(std::ofstream& stream, const std::string& name);
    void write_json(const std::string& name, const nlohmann::ordered_json& value);

    // Writes manifest.json listing every file written so far.
    void finish(nlohmann::ordered_json manifest);
    // Removes every file written so far, the manifest included.
    void rollback() noexcept;

private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

}  // namespace metaopt::cli
