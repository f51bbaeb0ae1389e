#ifndef NDTSIM_TRACE_HPP
#define NDTSIM_TRACE_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace ndtsim {

// FNV-1a 64-bit, used to fingerprint the dispatch log for replay checks.
inline std::uint64_t fnv1a_update(std::uint64_t hash, std::string_view data) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ull;

class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void Line(const std::string& line) = 0;
};

class MemoryTraceSink : public TraceSink {
public:
    void Line(const std::string& line) override { lines_.push_back(line); }
    const std::vector<std::string>& lines() const { return lines_; }

private:
    std::vector<std::string> lines_;
};

class FileTraceSink : public TraceSink {
public:
    explicit FileTraceSink(const std::string& path) : out_(path) {}
    bool ok() const { return out_.good(); }
    void Line(const std::string& line) override { out_ << line << '\n'; }

private:
    std::ofstream out_;
};

} // namespace ndtsim

#endif
