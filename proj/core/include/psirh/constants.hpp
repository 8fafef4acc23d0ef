#pragma once

namespace psirh {

// Euler's constant and the quantities built from it, rounded to binary64.
struct Constants {
    static constexpr double gamma = 0.57721566490153286061;
    static constexpr double e_gamma = 1.78107241799019798524;
    static constexpr double zeta2 = 1.64493406684822643647; // pi^2 / 6
    static constexpr double e_gamma_over_zeta2 = 1.08276219326092458012;

    // The same values as decimal strings with 20+ significant digits.
    static constexpr const char* gamma_text = "0.57721566490153286060651209008240243";
    static constexpr const char* e_gamma_text = "1.78107241799019798523650410310717955";
    static constexpr const char* zeta2_text = "1.64493406684822643647241516664602519";
    static constexpr const char* e_gamma_over_zeta2_text = "1.08276219326092458012218803819092657";
};

} // namespace psirh
