#include <patchwork/workbench.hpp>

#include <openssl/evp.h>

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace patchwork {

auto sha256_hex(const std::string & bytes) -> std::string
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (! EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw Error("SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

auto exit_code(Status s) -> int
{
    switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
    case Status::input_error: return 3;
    }
    return 3;
}

namespace {

auto status_name(Status s) -> const char *
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::input_error: return "INPUT-ERROR";
    }
    return "?";
}

} // namespace

auto Report::deterministic_json() const -> nlohmann::json
{
    nlohmann::json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["status"] = status_name(status);
    j["exit_code"] = exit_code(status);
    j["verdicts"] = nlohmann::json::array();
    for (auto & v : verdicts)
        j["verdicts"].push_back({{"tag", v.tag}, {"verdict", v.verdict}, {"detail", v.detail}});
    j["data"] = data;
    j["warnings"] = warnings;
    return j;
}

auto Report::digest() const -> std::string { return sha256_hex(deterministic_json().dump()); }

auto Report::render() const -> std::string
{
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "input sha256: " << (input_digest.empty() ? "-" : input_digest) << "\n";
    out << "status: " << status_name(status) << "\n";
    for (auto & v : verdicts)
        out << "[" << v.tag << "] " << v.verdict << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    for (auto & l : lines)
        out << "  " << l << "\n";
    for (auto & w : warnings)
        out << "warning: " << w << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", elapsed_ms);
    out << "elapsed ms: " << buf << "\n";
    auto j = deterministic_json();
    j["timing_ms"] = elapsed_ms;
    out << "--- machine-readable ---\n" << j.dump(2) << "\n";
    out << "digest: sha256:" << digest() << "\n";
    return out.str();
}

} // namespace patchwork
