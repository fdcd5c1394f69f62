#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace stackopt {

// SDLC phases in their canonical (and iteration) order.
enum class Phase : std::uint8_t {
  requirements,
  design,
  development,
  testing,
  deployment,
  maintenance,
};

inline constexpr std::size_t kPhaseCount = 6;

inline constexpr std::array<Phase, kPhaseCount> kPhases{
    Phase::requirements, Phase::design,     Phase::development,
    Phase::testing,      Phase::deployment, Phase::maintenance,
};

constexpr std::size_t index_of(Phase p) noexcept {
  return static_cast<std::size_t>(p);
}

// Short key used in scenario files and CSV columns ("req", "dev", ...).
constexpr std::string_view key_of(Phase p) noexcept {
  constexpr std::array<std::string_view, kPhaseCount> keys{
      "req", "design", "dev", "test", "deploy", "maint"};
  return keys[index_of(p)];
}

constexpr std::string_view name_of(Phase p) noexcept {
  constexpr std::array<std::string_view, kPhaseCount> names{
      "requirements", "design",     "development",
      "testing",      "deployment", "maintenance"};
  return names[index_of(p)];
}

constexpr std::optional<Phase> phase_from_key(std::string_view key) noexcept {
  for (auto p : kPhases) {
    if (key_of(p) == key) {
      return p;
    }
  }
  return std::nullopt;
}

// Fixed-size table indexed by Phase.
template<typename T>
struct PhaseMap {
  std::array<T, kPhaseCount> values{};

  static constexpr PhaseMap filled(T const& v) {
    PhaseMap m;
    m.values.fill(v);
    return m;
  }

  constexpr T& operator[](Phase p) noexcept { return values[index_of(p)]; }
  constexpr T const& operator[](Phase p) const noexcept {
    return values[index_of(p)];
  }

  constexpr auto begin() noexcept { return values.begin(); }
  constexpr auto end() noexcept { return values.end(); }
  constexpr auto begin() const noexcept { return values.begin(); }
  constexpr auto end() const noexcept { return values.end(); }

  friend constexpr bool operator==(PhaseMap const&, PhaseMap const&) = default;
};

} // namespace stackopt
