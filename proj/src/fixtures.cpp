#include "cubesum/fixtures.hpp"

#include "cubesum/io.hpp"

namespace cubesum {

namespace {

struct RecordFixture {
    long long a;
    long long b;
    char root;  // '+' or '-'
    long long n;
    long long N;
    long long x;
    long long y;
};

// The 31 solutions for 0 < n < 1000 under b < 0 < a < |b|, increasing N,
// ascending a on ties. Frozen as printed; nothing here is computed.
constexpr RecordFixture kTable1[] = {
    {3, -8, '+', 3, 91, 6, -5},
    {2, -7, '+', 4, 189, 6, -3},
    {3, -8, '-', 9, 1729, 12, 1},
    {10, -39, '+', 18, 12691, 28, -21},
    {9, -38, '-', 32, 68705, 41, -6},
    {10, -39, '-', 36, 97309, 46, -3},
    {105, -194, '+', 46, 201159, 151, -148},
    {32, -127, '+', 58, 400491, 90, -69},
    {64, -243, '+', 107, 2484755, 171, -136},
    {73, -258, '+', 108, 2554741, 181, -150},
    {32, -103, '-', 121, 3587409, 153, 18},
    {248, -481, '+', 121, 3587409, 369, -360},
    {37, -192, '-', 123, 3767491, 160, -69},
    {43, -168, '-', 163, 8741691, 206, -5},
    {91, -360, '+', 163, 8741691, 254, -197},
    {819, -1208, '+', 197, 15407765, 1016, -1011},
    {57, -128, '-', 235, 26122131, 292, 107},
    {184, -597, '+', 235, 26122131, 419, -362},
    {77, -208, '-', 301, 54814509, 378, 93},
    {120, -629, '+', 393, 121861441, 513, -236},
    {120, -629, '-', 411, 139361059, 531, -218},
    {393, -1178, '+', 438, 168632191, 831, -740},
    {152, -793, '+', 481, 223264809, 633, -312},
    {128, -511, '-', 490, 236019771, 618, -21},
    {3225, -4274, '+', 528, 295233841, 3753, -3746},
    {148, -687, '-', 562, 355957875, 710, -125},
    {2258, -3367, '+', 562, 355957875, 2820, -2805},
    {512, -1591, '+', 607, 448404255, 1119, -984},
    {777, -1952, '+', 633, 508476241, 1410, -1319},
    {190, -999, '-', 640, 525518721, 830, -359},
    {442, -1767, '+', 804, 1041378589, 1246, -963},
};

constexpr FamilyFixtureRow kTable2One[] = {
    {1, 3, 6, -5, 1},
    {2, 46, 151, -148, 3},
    {3, 197, 1016, -1011, 5},
    {4, 528, 3753, -3746, 7},
    {5, 1111, 10090, -10081, 9},
    {6, 2018, 22331, -22320, 11},
    {7, 3321, 43356, -43343, 13},
    {8, 5092, 76621, -76606, 15},
    {9, 7403, 126158, -126141, 17},
    {10, 10326, 196575, -196556, 19},
    {11, 13933, 293056, -293035, 21},
    {12, 18296, 421361, -421338, 23},
    {13, 23487, 587826, -587801, 25},
    {14, 29578, 799363, -799336, 27},
    {15, 36641, 1063460, -1063431, 29},
    {16, 44748, 1388181, -1388150, 31},
    {17, 53971, 1782166, -1782133, 33},
    {18, 64382, 2254631, -2254596, 35},
    {19, 76053, 2815368, -2815331, 37},
    {20, 89056, 3474745, -3474706, 39},
};

constexpr FamilyFixtureRow kTable2Two[] = {
    {1, 4, 6, -3, 3},
    {2, 121, 369, -360, 9},
    {3, 562, 2820, -2805, 15},
    {4, 1543, 10815, -10794, 21},
    {5, 3280, 29538, -29511, 27},
    {6, 5989, 65901, -65868, 33},
    {7, 9886, 128544, -128505, 39},
    {8, 15187, 227835, -227790, 45},
    {9, 22108, 375870, -375819, 51},
    {10, 30865, 586473, -586416, 57},
    {11, 41674, 875196, -875133, 63},
    {12, 54751, 1259319, -1259250, 69},
    {13, 70312, 1757850, -1757775, 75},
    {14, 88573, 2391525, -2391444, 81},
    {15, 109750, 3182808, -3182721, 87},
    {16, 134059, 4155891, -4155798, 93},
    {17, 161716, 5336694, -5336595, 99},
    {18, 192937, 6752865, -6752760, 105},
    {19, 227938, 8433780, -8433669, 111},
    {20, 266935, 10410543, -10410426, 117},
};

}  // namespace

const std::vector<CubeSumRecord>& table1_records() {
    static const std::vector<CubeSumRecord> records = [] {
        std::vector<CubeSumRecord> out;
        for (const auto& f : kTable1) {
            CubeSumRecord r;
            r.n = f.n;
            r.a = f.a;
            r.b = f.b;
            r.N = f.N;
            r.x = f.x;
            r.y = f.y;
            r.root = f.root == '+' ? Branch::Plus : Branch::Minus;
            out.push_back(std::move(r));
        }
        return out;
    }();
    return records;
}

const std::vector<FamilyFixtureRow>& table2_fixture(Family f) {
    static const std::vector<FamilyFixtureRow> one(std::begin(kTable2One),
                                                   std::end(kTable2One));
    static const std::vector<FamilyFixtureRow> two(std::begin(kTable2Two),
                                                   std::end(kTable2Two));
    return f == Family::One ? one : two;
}

std::string table1_markdown() { return records_to_markdown(table1_records()); }

std::string table2_markdown() {
    std::string out =
        "| i | n | n+a | n+b | eta | n | n+a | n+b | eta |\n"
        "|---|---|---|---|---|---|---|---|---|\n";
    const auto& one = table2_fixture(Family::One);
    const auto& two = table2_fixture(Family::Two);
    for (std::size_t k = 0; k < one.size(); ++k) {
        auto cell = [](long long v) { return std::to_string(v); };
        out += "| " + cell(one[k].i) + " | " + cell(one[k].n) + " | " +
               cell(one[k].x) + " | " + cell(one[k].y) + " | " + cell(one[k].eta) +
               " | " + cell(two[k].n) + " | " + cell(two[k].x) + " | " +
               cell(two[k].y) + " | " + cell(two[k].eta) + " |\n";
    }
    return out;
}

}  // namespace cubesum
