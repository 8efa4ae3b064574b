#include <doctest.h>

#include "sy/grading.hpp"

using namespace sy;

TEST_CASE("parities are the digits") {
    CHECK(ZeroOneSequence::parse("011").parity(2) == 1);
    CHECK(ZeroOneSequence::parse("0011010").parity(1) == 0);
    ZeroOneSequence st = ZeroOneSequence::standard(2, 1);
    CHECK(st.str() == "001");
    CHECK(st.parity(3) == 1);
    CHECK(st.zeros() == 2);
    CHECK(st.ones() == 1);
    CHECK_THROWS(ZeroOneSequence::parse("012"));
    CHECK_THROWS(ZeroOneSequence::parse(""));
    CHECK_THROWS(st.parity(4));
}

TEST_CASE("check, reverse and dagger") {
    ZeroOneSequence s = ZeroOneSequence::parse("0011010");
    CHECK(s.check().str() == "1100101");
    CHECK(s.reversed().str() == "0101100");
    CHECK(s.dagger().str() == "1010011");
    CHECK(s.dagger().dagger() == s);
    CHECK(s.check().reversed() == s.dagger());
}

TEST_CASE("splitting by a composition") {
    auto names = [](const Composition& mu) {
        std::vector<std::string> out;
        for (const auto& b : mu.split()) out.push_back(b.str());
        return out;
    };
    Composition big = Composition::parse(ZeroOneSequence::parse("011100011"), "2,4,3");
    CHECK(names(big) == std::vector<std::string>{"01", "1100", "011"});
    CHECK(names(Composition::parse(ZeroOneSequence::parse("01"), "2")) == std::vector<std::string>{"01"});
    CHECK(names(Composition::parse(ZeroOneSequence::parse("0101"), "1,2,1")) ==
          std::vector<std::string>{"0", "10", "1"});
    CHECK_THROWS(Composition::parse(ZeroOneSequence::parse("01"), "3"));
    CHECK_THROWS(Composition::parse(ZeroOneSequence::parse("01"), "1,0,1"));
}

TEST_CASE("block offsets and restricted parities") {
    Composition mu = Composition::parse(ZeroOneSequence::parse("0101"), "1,2,1");
    CHECK(mu.blocks() == 3);
    CHECK(mu.block_start(1) == 0);
    CHECK(mu.block_start(3) == 3);
    CHECK(mu.global_index(2, 2) == 3);
    CHECK(mu.restricted_parity(2, 1) == 1);
    CHECK(mu.restricted_parity(2, 2) == 0);
    CHECK(mu.parts_str() == "1,2,1");
    Composition rd = Composition::parse(ZeroOneSequence::parse("001"), "2,1").reversed_dagger();
    CHECK(rd.sequence().str() == "011");
    CHECK(rd.parts() == std::vector<int>{1, 2});
}

TEST_CASE("restricted parities agree with the digits of each block") {
    for (const char* text : {"0011010", "1100", "010110"}) {
        ZeroOneSequence s = ZeroOneSequence::parse(text);
        for (int first = 1; first < s.size(); ++first) {
            Composition mu(s, {first, s.size() - first});
            for (int a = 1; a <= 2; ++a)
                for (int i = 1; i <= mu.part(a); ++i) {
                    CHECK(mu.restricted_parity(a, i) == s.parity(mu.global_index(a, i)));
                    CHECK(mu.block_sequence(a).parity(i) == mu.restricted_parity(a, i));
                }
        }
    }
}
