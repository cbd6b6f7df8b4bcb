#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

// Just enough JSON Schema to check the shipped schemas: type, properties,
// required, items, and enum. Returns violation messages; empty means valid.
namespace schema_check {

using json = nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void check_node(const json& value, const json& schema, const std::string& path,
                       std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        if (!type_matches(value, type)) {
            errors.push_back(path + ": expected type " + type);
            return;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& option : schema["enum"]) {
            if (value == option) {
                hit = true;
                break;
            }
        }
        if (!hit) errors.push_back(path + ": value not in enum");
    }
    if (schema.contains("required") && value.is_object()) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                errors.push_back(path + ": missing required key " + key.get<std::string>());
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& item : schema["properties"].items()) {
            if (value.contains(item.key())) {
                check_node(value[item.key()], item.value(), path + "/" + item.key(), errors);
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        int i = 0;
        for (const auto& element : value) {
            check_node(element, schema["items"], path + "/" + std::to_string(i), errors);
            ++i;
        }
    }
}

inline std::vector<std::string> validate(const json& value, const json& schema) {
    std::vector<std::string> errors;
    check_node(value, schema, "$", errors);
    return errors;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json out;
    in >> out;
    return out;
}

}  // namespace schema_check
