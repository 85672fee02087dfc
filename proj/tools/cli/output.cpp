#include "output.hpp"

#include <stdexcept>
#include <system_error>

namespace metaopt::cli {

OutputSet::OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) {
        throw std::runtime_error("cannot create output directory '" + dir_.string() + "'" +
                                 (ec ? ": " + ec.message() : std::string()));
    }
}

std::ofstream OutputSet::open(const std::string& name) {
    const auto path = dir_ / name;
    files_.push_back(name);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void OutputSet::close(std::ofstream& stream, const std::string& name) {
    stream.flush();
    const bool ok = static_cast<bool>(stream);
    stream.close();
    if (!ok) throw std::runtime_error("write failed for '" + (dir_ / name).string() + "'");
}

void OutputSet::write_json(const std::string& name, const nlohmann::ordered_json& value) {
    auto out = open(name);
    out << value.dump(2) << '\n';
    close(out, name);
}

void OutputSet::finish(nlohmann::ordered_json manifest) {
    manifest["files"] = files_;
    write_json("manifest.json", manifest);
}

void OutputSet::rollback() noexcept {
    for (const auto& name : files_) {
        std::error_code ec;
        std::filesystem::remove(dir_ / name, ec);
    }
    files_.clear();
}

}  // namespace metaopt::cli
