#include "lbs_cli/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lbs::cli {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::newline() {
    os_ << '\n';
    for (std::size_t i = 0; i < stack_.size(); ++i) {
        os_ << "  ";
    }
}

void JsonWriter::before_value() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (stack_.empty()) {
        return;
    }
    Frame& f = stack_.back();
    if (!f.array) {
        throw std::logic_error("object members need a key");
    }
    if (!f.empty) {
        os_ << ',';
    }
    f.empty = false;
    newline();
}

JsonWriter& JsonWriter::begin_object() {
    before_value();
    os_ << '{';
    stack_.push_back({false, true});
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
        newline();
    }
    os_ << '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_value();
    os_ << '[';
    stack_.push_back({true, true});
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
        newline();
    }
    os_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    Frame& f = stack_.back();
    if (f.array) {
        throw std::logic_error("arrays hold values, not keys");
    }
    if (!f.empty) {
        os_ << ',';
    }
    f.empty = false;
    newline();
    write_string(name);
    os_ << ": ";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    if (!std::isfinite(v)) {
        return null();
    }
    before_value();
    os_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    before_value();
    os_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    before_value();
    os_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    before_value();
    os_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    before_value();
    os_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    before_value();
    write_string(v);
    return *this;
}

void JsonWriter::write_string(std::string_view v) {
    os_ << '"';
    for (char ch : v) {
        switch (ch) {
            case '"': os_ << "\\\""; break;
            case '\\': os_ << "\\\\"; break;
            case '\n': os_ << "\\n"; break;
            case '\t': os_ << "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    os_ << buf;
                } else {
                    os_ << ch;
                }
        }
    }
    os_ << '"';
}

JsonWriter& JsonWriter::null() {
    before_value();
    os_ << "null";
    return *this;
}

JsonWriter& JsonWriter::value(const std::vector<double>& v) {
    begin_array();
    for (double x : v) {
        value(x);
    }
    return end_array();
}

JsonWriter& JsonWriter::value(const std::vector<std::string>& v) {
    begin_array();
    for (const auto& s : v) {
        value(std::string_view(s));
    }
    return end_array();
}

void JsonWriter::finish() {
    if (!stack_.empty()) {
        throw std::logic_error("unterminated JSON document");
    }
    os_ << '\n';
}

}  // namespace lbs::cli
