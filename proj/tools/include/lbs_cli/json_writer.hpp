#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lbs::cli {

// Streaming JSON writer that keeps keys in insertion order and prints every double
// with 17 significant digits, so output round-trips and diffs cleanly across runs.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& os) : os_(os) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);

    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& null();

    JsonWriter& value(const std::vector<double>& v);
    JsonWriter& value(const std::vector<std::string>& v);

    template <typename T>
    JsonWriter& field(std::string_view name, const T& v) {
        key(name);
        return value(v);
    }

    // Terminates the document with a newline; the writer must be at the top level.
    void finish();

private:
    struct Frame {
        bool array;
        bool empty;
    };

    void before_value();
    void newline();
    void write_string(std::string_view v);

    std::ostream& os_;
    std::vector<Frame> stack_;
    bool after_key_ = false;
};

std::string format_double(double v);

}  // namespace lbs::cli
