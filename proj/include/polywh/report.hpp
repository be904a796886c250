#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace polywh {

/// One verified identity: its name, the measured residual and the bound it
/// was checked against. `note` carries extra context (boundary values,
/// recorded phases, ...).
struct CheckItem {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

/// Outcome of a verification suite. Failures are carried, not thrown.
class CheckReport {
  public:
    void add(std::string name, double residual, double tol, std::string note = "") {
        items_.push_back({std::move(name), residual, tol, residual <= tol, std::move(note)});
    }

    void add_bool(std::string name, bool pass, std::string note = "") {
        items_.push_back({std::move(name), pass ? 0.0 : 1.0, 0.5, pass, std::move(note)});
    }

    void merge(const CheckReport& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
    }

    [[nodiscard]] bool all_pass() const {
        return std::all_of(items_.begin(), items_.end(),
                           [](const CheckItem& c) { return c.pass; });
    }

    [[nodiscard]] double max_residual() const {
        double m = 0.0;
        for (const auto& c : items_) m = std::max(m, c.residual);
        return m;
    }

    [[nodiscard]] const std::vector<CheckItem>& items() const { return items_; }

    [[nodiscard]] const CheckItem* find(const std::string& name) const {
        for (const auto& c : items_)
            if (c.name == name) return &c;
        return nullptr;
    }

  private:
    std::vector<CheckItem> items_;
};

}  // namespace polywh
