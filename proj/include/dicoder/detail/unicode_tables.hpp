// Generated by tools/gen_unicode_tables.py from Unicode 13.0.0. Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace dicoder::detail {

struct CodeRange {
  char32_t first;
  char32_t last;
};

inline constexpr std::size_t kMaxFoldLength = 3;

struct FoldEntry {
  char32_t from;
  std::uint8_t length;
  std::array<char32_t, kMaxFoldLength> to;
};

inline constexpr std::array<CodeRange, 665> kTokenRanges = {{
    {0x0030, 0x0039},
    {0x0041, 0x005A},
    {0x0061, 0x007A},
    {0x00AA, 0x00AA},
    {0x00B5, 0x00B5},
    {0x00BA, 0x00BA},
    {0x00C0, 0x00D6},
    {0x00D8, 0x00F6},
    {0x00F8, 0x02C1},
    {0x02C6, 0x02D1},
    {0x02E0, 0x02E4},
    {0x02EC, 0x02EC},
    {0x02EE, 0x02EE},
    {0x0370, 0x0374},
    {0x0376, 0x0377},
    {0x037A, 0x037D},
    {0x037F, 0x037F},
    {0x0386, 0x0386},
    {0x0388, 0x038A},
    {0x038C, 0x038C},
    {0x038E, 0x03A1},
    {0x03A3, 0x03F5},
    {0x03F7, 0x0481},
    {0x048A, 0x052F},
    {0x0531, 0x0556},
    {0x0559, 0x0559},
    {0x0560, 0x0588},
    {0x05D0, 0x05EA},
    {0x05EF, 0x05F2},
    {0x0620, 0x064A},
    {0x0660, 0x0669},
    {0x066E, 0x066F},
    {0x0671, 0x06D3},
    {0x06D5, 0x06D5},
    {0x06E5, 0x06E6},
    {0x06EE, 0x06FC},
    {0x06FF, 0x06FF},
    {0x0710, 0x0710},
    {0x0712, 0x072F},
    {0x074D, 0x07A5},
    {0x07B1, 0x07B1},
    {0x07C0, 0x07EA},
    {0x07F4, 0x07F5},
    {0x07FA, 0x07FA},
    {0x0800, 0x0815},
    {0x081A, 0x081A},
    {0x0824, 0x0824},
    {0x0828, 0x0828},
    {0x0840, 0x0858},
    {0x0860, 0x086A},
    {0x08A0, 0x08B4},
    {0x08B6, 0x08C7},
    {0x0904, 0x0939},
    {0x093D, 0x093D},
    {0x0950, 0x0950},
    {0x0958, 0x0961},
    {0x0966, 0x096F},
    {0x0971, 0x0980},
    {0x0985, 0x098C},
    {0x098F, 0x0990},
    {0x0993, 0x09A8},
    {0x09AA, 0x09B0},
    {0x09B2, 0x09B2},
    {0x09B6, 0x09B9},
    {0x09BD, 0x09BD},
    {0x09CE, 0x09CE},
    {0x09DC, 0x09DD},
    {0x09DF, 0x09E1},
    {0x09E6, 0x09F1},
    {0x09FC, 0x09FC},
    {0x0A05, 0x0A0A},
    {0x0A0F, 0x0A10},
    {0x0A13, 0x0A28},
    {0x0A2A, 0x0A30},
    {0x0A32, 0x0A33},
    {0x0A35, 0x0A36},
    {0x0A38, 0x0A39},
    {0x0A59, 0x0A5C},
    {0x0A5E, 0x0A5E},
    {0x0A66, 0x0A6F},
    {0x0A72, 0x0A74},
    {0x0A85, 0x0A8D},
    {0x0A8F, 0x0A91},
    {0x0A93, 0x0AA8},
    {0x0AAA, 0x0AB0},
    {0x0AB2, 0x0AB3},
    {0x0AB5, 0x0AB9},
    {0x0ABD, 0x0ABD},
    {0x0AD0, 0x0AD0},
    {0x0AE0, 0x0AE1},
    {0x0AE6, 0x0AEF},
    {0x0AF9, 0x0AF9},
    {0x0B05, 0x0B0C},
    {0x0B0F, 0x0B10},
    {0x0B13, 0x0B28},
    {0x0B2A, 0x0B30},
    {0x0B32, 0x0B33},
    {0x0B35, 0x0B39},
    {0x0B3D, 0x0B3D},
    {0x0B5C, 0x0B5D},
    {0x0B5F, 0x0B61},
    {0x0B66, 0x0B6F},
    {0x0B71, 0x0B71},
    {0x0B83, 0x0B83},
    {0x0B85, 0x0B8A},
    {0x0B8E, 0x0B90},
    {0x0B92, 0x0B95},
    {0x0B99, 0x0B9A},
    {0x0B9C, 0x0B9C},
    {0x0B9E, 0x0B9F},
    {0x0BA3, 0x0BA4},
    {0x0BA8, 0x0BAA},
    {0x0BAE, 0x0BB9},
    {0x0BD0, 0x0BD0},
    {0x0BE6, 0x0BEF},
    {0x0C05, 0x0C0C},
    {0x0C0E, 0x0C10},
    {0x0C12, 0x0C28},
    {0x0C2A, 0x0C39},
    {0x0C3D, 0x0C3D},
    {0x0C58, 0x0C5A},
    {0x0C60, 0x0C61},
    {0x0C66, 0x0C6F},
    {0x0C80, 0x0C80},
    {0x0C85, 0x0C8C},
    {0x0C8E, 0x0C90},
    {0x0C92, 0x0CA8},
    {0x0CAA, 0x0CB3},
    {0x0CB5, 0x0CB9},
    {0x0CBD, 0x0CBD},
    {0x0CDE, 0x0CDE},
    {0x0CE0, 0x0CE1},
    {0x0CE6, 0x0CEF},
    {0x0CF1, 0x0CF2},
    {0x0D04, 0x0D0C},
    {0x0D0E, 0x0D10},
    {0x0D12, 0x0D3A},
    {0x0D3D, 0x0D3D},
    {0x0D4E, 0x0D4E},
    {0x0D54, 0x0D56},
    {0x0D5F, 0x0D61},
    {0x0D66, 0x0D6F},
    {0x0D7A, 0x0D7F},
    {0x0D85, 0x0D96},
    {0x0D9A, 0x0DB1},
    {0x0DB3, 0x0DBB},
    {0x0DBD, 0x0DBD},
    {0x0DC0, 0x0DC6},
    {0x0DE6, 0x0DEF},
    {0x0E01, 0x0E30},
    {0x0E32, 0x0E33},
    {0x0E40, 0x0E46},
    {0x0E50, 0x0E59},
    {0x0E81, 0x0E82},
    {0x0E84, 0x0E84},
    {0x0E86, 0x0E8A},
    {0x0E8C, 0x0EA3},
    {0x0EA5, 0x0EA5},
    {0x0EA7, 0x0EB0},
    {0x0EB2, 0x0EB3},
    {0x0EBD, 0x0EBD},
    {0x0EC0, 0x0EC4},
    {0x0EC6, 0x0EC6},
    {0x0ED0, 0x0ED9},
    {0x0EDC, 0x0EDF},
    {0x0F00, 0x0F00},
    {0x0F20, 0x0F29},
    {0x0F40, 0x0F47},
    {0x0F49, 0x0F6C},
    {0x0F88, 0x0F8C},
    {0x1000, 0x102A},
    {0x103F, 0x1049},
    {0x1050, 0x1055},
    {0x105A, 0x105D},
    {0x1061, 0x1061},
    {0x1065, 0x1066},
    {0x106E, 0x1070},
    {0x1075, 0x1081},
    {0x108E, 0x108E},
    {0x1090, 0x1099},
    {0x10A0, 0x10C5},
    {0x10C7, 0x10C7},
    {0x10CD, 0x10CD},
    {0x10D0, 0x10FA},
    {0x10FC, 0x1248},
    {0x124A, 0x124D},
    {0x1250, 0x1256},
    {0x1258, 0x1258},
    {0x125A, 0x125D},
    {0x1260, 0x1288},
    {0x128A, 0x128D},
    {0x1290, 0x12B0},
    {0x12B2, 0x12B5},
    {0x12B8, 0x12BE},
    {0x12C0, 0x12C0},
    {0x12C2, 0x12C5},
    {0x12C8, 0x12D6},
    {0x12D8, 0x1310},
    {0x1312, 0x1315},
    {0x1318, 0x135A},
    {0x1380, 0x138F},
    {0x13A0, 0x13F5},
    {0x13F8, 0x13FD},
    {0x1401, 0x166C},
    {0x166F, 0x167F},
    {0x1681, 0x169A},
    {0x16A0, 0x16EA},
    {0x16F1, 0x16F8},
    {0x1700, 0x170C},
    {0x170E, 0x1711},
    {0x1720, 0x1731},
    {0x1740, 0x1751},
    {0x1760, 0x176C},
    {0x176E, 0x1770},
    {0x1780, 0x17B3},
    {0x17D7, 0x17D7},
    {0x17DC, 0x17DC},
    {0x17E0, 0x17E9},
    {0x1810, 0x1819},
    {0x1820, 0x1878},
    {0x1880, 0x1884},
    {0x1887, 0x18A8},
    {0x18AA, 0x18AA},
    {0x18B0, 0x18F5},
    {0x1900, 0x191E},
    {0x1946, 0x196D},
    {0x1970, 0x1974},
    {0x1980, 0x19AB},
    {0x19B0, 0x19C9},
    {0x19D0, 0x19D9},
    {0x1A00, 0x1A16},
    {0x1A20, 0x1A54},
    {0x1A80, 0x1A89},
    {0x1A90, 0x1A99},
    {0x1AA7, 0x1AA7},
    {0x1B05, 0x1B33},
    {0x1B45, 0x1B4B},
    {0x1B50, 0x1B59},
    {0x1B83, 0x1BA0},
    {0x1BAE, 0x1BE5},
    {0x1C00, 0x1C23},
    {0x1C40, 0x1C49},
    {0x1C4D, 0x1C7D},
    {0x1C80, 0x1C88},
    {0x1C90, 0x1CBA},
    {0x1CBD, 0x1CBF},
    {0x1CE9, 0x1CEC},
    {0x1CEE, 0x1CF3},
    {0x1CF5, 0x1CF6},
    {0x1CFA, 0x1CFA},
    {0x1D00, 0x1DBF},
    {0x1E00, 0x1F15},
    {0x1F18, 0x1F1D},
    {0x1F20, 0x1F45},
    {0x1F48, 0x1F4D},
    {0x1F50, 0x1F57},
    {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B},
    {0x1F5D, 0x1F5D},
    {0x1F5F, 0x1F7D},
    {0x1F80, 0x1FB4},
    {0x1FB6, 0x1FBC},
    {0x1FBE, 0x1FBE},
    {0x1FC2, 0x1FC4},
    {0x1FC6, 0x1FCC},
    {0x1FD0, 0x1FD3},
    {0x1FD6, 0x1FDB},
    {0x1FE0, 0x1FEC},
    {0x1FF2, 0x1FF4},
    {0x1FF6, 0x1FFC},
    {0x2071, 0x2071},
    {0x207F, 0x207F},
    {0x2090, 0x209C},
    {0x2102, 0x2102},
    {0x2107, 0x2107},
    {0x210A, 0x2113},
    {0x2115, 0x2115},
    {0x2119, 0x211D},
    {0x2124, 0x2124},
    {0x2126, 0x2126},
    {0x2128, 0x2128},
    {0x212A, 0x212D},
    {0x212F, 0x2139},
    {0x213C, 0x213F},
    {0x2145, 0x2149},
    {0x214E, 0x214E},
    {0x2183, 0x2184},
    {0x2C00, 0x2C2E},
    {0x2C30, 0x2C5E},
    {0x2C60, 0x2CE4},
    {0x2CEB, 0x2CEE},
    {0x2CF2, 0x2CF3},
    {0x2D00, 0x2D25},
    {0x2D27, 0x2D27},
    {0x2D2D, 0x2D2D},
    {0x2D30, 0x2D67},
    {0x2D6F, 0x2D6F},
    {0x2D80, 0x2D96},
    {0x2DA0, 0x2DA6},
    {0x2DA8, 0x2DAE},
    {0x2DB0, 0x2DB6},
    {0x2DB8, 0x2DBE},
    {0x2DC0, 0x2DC6},
    {0x2DC8, 0x2DCE},
    {0x2DD0, 0x2DD6},
    {0x2DD8, 0x2DDE},
    {0x2E2F, 0x2E2F},
    {0x3005, 0x3006},
    {0x3031, 0x3035},
    {0x303B, 0x303C},
    {0x3041, 0x3096},
    {0x309D, 0x309F},
    {0x30A1, 0x30FA},
    {0x30FC, 0x30FF},
    {0x3105, 0x312F},
    {0x3131, 0x318E},
    {0x31A0, 0x31BF},
    {0x31F0, 0x31FF},
    {0x3400, 0x4DBF},
    {0x4E00, 0x9FFC},
    {0xA000, 0xA48C},
    {0xA4D0, 0xA4FD},
    {0xA500, 0xA60C},
    {0xA610, 0xA62B},
    {0xA640, 0xA66E},
    {0xA67F, 0xA69D},
    {0xA6A0, 0xA6E5},
    {0xA717, 0xA71F},
    {0xA722, 0xA788},
    {0xA78B, 0xA7BF},
    {0xA7C2, 0xA7CA},
    {0xA7F5, 0xA801},
    {0xA803, 0xA805},
    {0xA807, 0xA80A},
    {0xA80C, 0xA822},
    {0xA840, 0xA873},
    {0xA882, 0xA8B3},
    {0xA8D0, 0xA8D9},
    {0xA8F2, 0xA8F7},
    {0xA8FB, 0xA8FB},
    {0xA8FD, 0xA8FE},
    {0xA900, 0xA925},
    {0xA930, 0xA946},
    {0xA960, 0xA97C},
    {0xA984, 0xA9B2},
    {0xA9CF, 0xA9D9},
    {0xA9E0, 0xA9E4},
    {0xA9E6, 0xA9FE},
    {0xAA00, 0xAA28},
    {0xAA40, 0xAA42},
    {0xAA44, 0xAA4B},
    {0xAA50, 0xAA59},
    {0xAA60, 0xAA76},
    {0xAA7A, 0xAA7A},
    {0xAA7E, 0xAAAF},
    {0xAAB1, 0xAAB1},
    {0xAAB5, 0xAAB6},
    {0xAAB9, 0xAABD},
    {0xAAC0, 0xAAC0},
    {0xAAC2, 0xAAC2},
    {0xAADB, 0xAADD},
    {0xAAE0, 0xAAEA},
    {0xAAF2, 0xAAF4},
    {0xAB01, 0xAB06},
    {0xAB09, 0xAB0E},
    {0xAB11, 0xAB16},
    {0xAB20, 0xAB26},
    {0xAB28, 0xAB2E},
    {0xAB30, 0xAB5A},
    {0xAB5C, 0xAB69},
    {0xAB70, 0xABE2},
    {0xABF0, 0xABF9},
    {0xAC00, 0xD7A3},
    {0xD7B0, 0xD7C6},
    {0xD7CB, 0xD7FB},
    {0xF900, 0xFA6D},
    {0xFA70, 0xFAD9},
    {0xFB00, 0xFB06},
    {0xFB13, 0xFB17},
    {0xFB1D, 0xFB1D},
    {0xFB1F, 0xFB28},
    {0xFB2A, 0xFB36},
    {0xFB38, 0xFB3C},
    {0xFB3E, 0xFB3E},
    {0xFB40, 0xFB41},
    {0xFB43, 0xFB44},
    {0xFB46, 0xFBB1},
    {0xFBD3, 0xFD3D},
    {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7},
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFE74},
    {0xFE76, 0xFEFC},
    {0xFF10, 0xFF19},
    {0xFF21, 0xFF3A},
    {0xFF41, 0xFF5A},
    {0xFF66, 0xFFBE},
    {0xFFC2, 0xFFC7},
    {0xFFCA, 0xFFCF},
    {0xFFD2, 0xFFD7},
    {0xFFDA, 0xFFDC},
    {0x10000, 0x1000B},
    {0x1000D, 0x10026},
    {0x10028, 0x1003A},
    {0x1003C, 0x1003D},
    {0x1003F, 0x1004D},
    {0x10050, 0x1005D},
    {0x10080, 0x100FA},
    {0x10280, 0x1029C},
    {0x102A0, 0x102D0},
    {0x10300, 0x1031F},
    {0x1032D, 0x10340},
    {0x10342, 0x10349},
    {0x10350, 0x10375},
    {0x10380, 0x1039D},
    {0x103A0, 0x103C3},
    {0x103C8, 0x103CF},
    {0x10400, 0x1049D},
    {0x104A0, 0x104A9},
    {0x104B0, 0x104D3},
    {0x104D8, 0x104FB},
    {0x10500, 0x10527},
    {0x10530, 0x10563},
    {0x10600, 0x10736},
    {0x10740, 0x10755},
    {0x10760, 0x10767},
    {0x10800, 0x10805},
    {0x10808, 0x10808},
    {0x1080A, 0x10835},
    {0x10837, 0x10838},
    {0x1083C, 0x1083C},
    {0x1083F, 0x10855},
    {0x10860, 0x10876},
    {0x10880, 0x1089E},
    {0x108E0, 0x108F2},
    {0x108F4, 0x108F5},
    {0x10900, 0x10915},
    {0x10920, 0x10939},
    {0x10980, 0x109B7},
    {0x109BE, 0x109BF},
    {0x10A00, 0x10A00},
    {0x10A10, 0x10A13},
    {0x10A15, 0x10A17},
    {0x10A19, 0x10A35},
    {0x10A60, 0x10A7C},
    {0x10A80, 0x10A9C},
    {0x10AC0, 0x10AC7},
    {0x10AC9, 0x10AE4},
    {0x10B00, 0x10B35},
    {0x10B40, 0x10B55},
    {0x10B60, 0x10B72},
    {0x10B80, 0x10B91},
    {0x10C00, 0x10C48},
    {0x10C80, 0x10CB2},
    {0x10CC0, 0x10CF2},
    {0x10D00, 0x10D23},
    {0x10D30, 0x10D39},
    {0x10E80, 0x10EA9},
    {0x10EB0, 0x10EB1},
    {0x10F00, 0x10F1C},
    {0x10F27, 0x10F27},
    {0x10F30, 0x10F45},
    {0x10FB0, 0x10FC4},
    {0x10FE0, 0x10FF6},
    {0x11003, 0x11037},
    {0x11066, 0x1106F},
    {0x11083, 0x110AF},
    {0x110D0, 0x110E8},
    {0x110F0, 0x110F9},
    {0x11103, 0x11126},
    {0x11136, 0x1113F},
    {0x11144, 0x11144},
    {0x11147, 0x11147},
    {0x11150, 0x11172},
    {0x11176, 0x11176},
    {0x11183, 0x111B2},
    {0x111C1, 0x111C4},
    {0x111D0, 0x111DA},
    {0x111DC, 0x111DC},
    {0x11200, 0x11211},
    {0x11213, 0x1122B},
    {0x11280, 0x11286},
    {0x11288, 0x11288},
    {0x1128A, 0x1128D},
    {0x1128F, 0x1129D},
    {0x1129F, 0x112A8},
    {0x112B0, 0x112DE},
    {0x112F0, 0x112F9},
    {0x11305, 0x1130C},
    {0x1130F, 0x11310},
    {0x11313, 0x11328},
    {0x1132A, 0x11330},
    {0x11332, 0x11333},
    {0x11335, 0x11339},
    {0x1133D, 0x1133D},
    {0x11350, 0x11350},
    {0x1135D, 0x11361},
    {0x11400, 0x11434},
    {0x11447, 0x1144A},
    {0x11450, 0x11459},
    {0x1145F, 0x11461},
    {0x11480, 0x114AF},
    {0x114C4, 0x114C5},
    {0x114C7, 0x114C7},
    {0x114D0, 0x114D9},
    {0x11580, 0x115AE},
    {0x115D8, 0x115DB},
    {0x11600, 0x1162F},
    {0x11644, 0x11644},
    {0x11650, 0x11659},
    {0x11680, 0x116AA},
    {0x116B8, 0x116B8},
    {0x116C0, 0x116C9},
    {0x11700, 0x1171A},
    {0x11730, 0x11739},
    {0x11800, 0x1182B},
    {0x118A0, 0x118E9},
    {0x118FF, 0x11906},
    {0x11909, 0x11909},
    {0x1190C, 0x11913},
    {0x11915, 0x11916},
    {0x11918, 0x1192F},
    {0x1193F, 0x1193F},
    {0x11941, 0x11941},
    {0x11950, 0x11959},
    {0x119A0, 0x119A7},
    {0x119AA, 0x119D0},
    {0x119E1, 0x119E1},
    {0x119E3, 0x119E3},
    {0x11A00, 0x11A00},
    {0x11A0B, 0x11A32},
    {0x11A3A, 0x11A3A},
    {0x11A50, 0x11A50},
    {0x11A5C, 0x11A89},
    {0x11A9D, 0x11A9D},
    {0x11AC0, 0x11AF8},
    {0x11C00, 0x11C08},
    {0x11C0A, 0x11C2E},
    {0x11C40, 0x11C40},
    {0x11C50, 0x11C59},
    {0x11C72, 0x11C8F},
    {0x11D00, 0x11D06},
    {0x11D08, 0x11D09},
    {0x11D0B, 0x11D30},
    {0x11D46, 0x11D46},
    {0x11D50, 0x11D59},
    {0x11D60, 0x11D65},
    {0x11D67, 0x11D68},
    {0x11D6A, 0x11D89},
    {0x11D98, 0x11D98},
    {0x11DA0, 0x11DA9},
    {0x11EE0, 0x11EF2},
    {0x11FB0, 0x11FB0},
    {0x12000, 0x12399},
    {0x12480, 0x12543},
    {0x13000, 0x1342E},
    {0x14400, 0x14646},
    {0x16800, 0x16A38},
    {0x16A40, 0x16A5E},
    {0x16A60, 0x16A69},
    {0x16AD0, 0x16AED},
    {0x16B00, 0x16B2F},
    {0x16B40, 0x16B43},
    {0x16B50, 0x16B59},
    {0x16B63, 0x16B77},
    {0x16B7D, 0x16B8F},
    {0x16E40, 0x16E7F},
    {0x16F00, 0x16F4A},
    {0x16F50, 0x16F50},
    {0x16F93, 0x16F9F},
    {0x16FE0, 0x16FE1},
    {0x16FE3, 0x16FE3},
    {0x17000, 0x187F7},
    {0x18800, 0x18CD5},
    {0x18D00, 0x18D08},
    {0x1B000, 0x1B11E},
    {0x1B150, 0x1B152},
    {0x1B164, 0x1B167},
    {0x1B170, 0x1B2FB},
    {0x1BC00, 0x1BC6A},
    {0x1BC70, 0x1BC7C},
    {0x1BC80, 0x1BC88},
    {0x1BC90, 0x1BC99},
    {0x1D400, 0x1D454},
    {0x1D456, 0x1D49C},
    {0x1D49E, 0x1D49F},
    {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6},
    {0x1D4A9, 0x1D4AC},
    {0x1D4AE, 0x1D4B9},
    {0x1D4BB, 0x1D4BB},
    {0x1D4BD, 0x1D4C3},
    {0x1D4C5, 0x1D505},
    {0x1D507, 0x1D50A},
    {0x1D50D, 0x1D514},
    {0x1D516, 0x1D51C},
    {0x1D51E, 0x1D539},
    {0x1D53B, 0x1D53E},
    {0x1D540, 0x1D544},
    {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550},
    {0x1D552, 0x1D6A5},
    {0x1D6A8, 0x1D6C0},
    {0x1D6C2, 0x1D6DA},
    {0x1D6DC, 0x1D6FA},
    {0x1D6FC, 0x1D714},
    {0x1D716, 0x1D734},
    {0x1D736, 0x1D74E},
    {0x1D750, 0x1D76E},
    {0x1D770, 0x1D788},
    {0x1D78A, 0x1D7A8},
    {0x1D7AA, 0x1D7C2},
    {0x1D7C4, 0x1D7CB},
    {0x1D7CE, 0x1D7FF},
    {0x1E100, 0x1E12C},
    {0x1E137, 0x1E13D},
    {0x1E140, 0x1E149},
    {0x1E14E, 0x1E14E},
    {0x1E2C0, 0x1E2EB},
    {0x1E2F0, 0x1E2F9},
    {0x1E800, 0x1E8C4},
    {0x1E900, 0x1E943},
    {0x1E94B, 0x1E94B},
    {0x1E950, 0x1E959},
    {0x1EE00, 0x1EE03},
    {0x1EE05, 0x1EE1F},
    {0x1EE21, 0x1EE22},
    {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27},
    {0x1EE29, 0x1EE32},
    {0x1EE34, 0x1EE37},
    {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B},
    {0x1EE42, 0x1EE42},
    {0x1EE47, 0x1EE47},
    {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B},
    {0x1EE4D, 0x1EE4F},
    {0x1EE51, 0x1EE52},
    {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57},
    {0x1EE59, 0x1EE59},
    {0x1EE5B, 0x1EE5B},
    {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F},
    {0x1EE61, 0x1EE62},
    {0x1EE64, 0x1EE64},
    {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72},
    {0x1EE74, 0x1EE77},
    {0x1EE79, 0x1EE7C},
    {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89},
    {0x1EE8B, 0x1EE9B},
    {0x1EEA1, 0x1EEA3},
    {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB},
    {0x1FBF0, 0x1FBF9},
    {0x20000, 0x2A6DD},
    {0x2A700, 0x2B734},
    {0x2B740, 0x2B81D},
    {0x2B820, 0x2CEA1},
    {0x2CEB0, 0x2EBE0},
    {0x2F800, 0x2FA1D},
    {0x30000, 0x3134A},
}};

inline constexpr std::array<CodeRange, 304> kDroppedRanges = {{
    {0x00AD, 0x00AD},
    {0x0300, 0x036F},
    {0x0483, 0x0489},
    {0x0591, 0x05BD},
    {0x05BF, 0x05BF},
    {0x05C1, 0x05C2},
    {0x05C4, 0x05C5},
    {0x05C7, 0x05C7},
    {0x0600, 0x0605},
    {0x0610, 0x061A},
    {0x061C, 0x061C},
    {0x064B, 0x065F},
    {0x0670, 0x0670},
    {0x06D6, 0x06DD},
    {0x06DF, 0x06E4},
    {0x06E7, 0x06E8},
    {0x06EA, 0x06ED},
    {0x070F, 0x070F},
    {0x0711, 0x0711},
    {0x0730, 0x074A},
    {0x07A6, 0x07B0},
    {0x07EB, 0x07F3},
    {0x07FD, 0x07FD},
    {0x0816, 0x0819},
    {0x081B, 0x0823},
    {0x0825, 0x0827},
    {0x0829, 0x082D},
    {0x0859, 0x085B},
    {0x08D3, 0x0903},
    {0x093A, 0x093C},
    {0x093E, 0x094F},
    {0x0951, 0x0957},
    {0x0962, 0x0963},
    {0x0981, 0x0983},
    {0x09BC, 0x09BC},
    {0x09BE, 0x09C4},
    {0x09C7, 0x09C8},
    {0x09CB, 0x09CD},
    {0x09D7, 0x09D7},
    {0x09E2, 0x09E3},
    {0x09FE, 0x09FE},
    {0x0A01, 0x0A03},
    {0x0A3C, 0x0A3C},
    {0x0A3E, 0x0A42},
    {0x0A47, 0x0A48},
    {0x0A4B, 0x0A4D},
    {0x0A51, 0x0A51},
    {0x0A70, 0x0A71},
    {0x0A75, 0x0A75},
    {0x0A81, 0x0A83},
    {0x0ABC, 0x0ABC},
    {0x0ABE, 0x0AC5},
    {0x0AC7, 0x0AC9},
    {0x0ACB, 0x0ACD},
    {0x0AE2, 0x0AE3},
    {0x0AFA, 0x0AFF},
    {0x0B01, 0x0B03},
    {0x0B3C, 0x0B3C},
    {0x0B3E, 0x0B44},
    {0x0B47, 0x0B48},
    {0x0B4B, 0x0B4D},
    {0x0B55, 0x0B57},
    {0x0B62, 0x0B63},
    {0x0B82, 0x0B82},
    {0x0BBE, 0x0BC2},
    {0x0BC6, 0x0BC8},
    {0x0BCA, 0x0BCD},
    {0x0BD7, 0x0BD7},
    {0x0C00, 0x0C04},
    {0x0C3E, 0x0C44},
    {0x0C46, 0x0C48},
    {0x0C4A, 0x0C4D},
    {0x0C55, 0x0C56},
    {0x0C62, 0x0C63},
    {0x0C81, 0x0C83},
    {0x0CBC, 0x0CBC},
    {0x0CBE, 0x0CC4},
    {0x0CC6, 0x0CC8},
    {0x0CCA, 0x0CCD},
    {0x0CD5, 0x0CD6},
    {0x0CE2, 0x0CE3},
    {0x0D00, 0x0D03},
    {0x0D3B, 0x0D3C},
    {0x0D3E, 0x0D44},
    {0x0D46, 0x0D48},
    {0x0D4A, 0x0D4D},
    {0x0D57, 0x0D57},
    {0x0D62, 0x0D63},
    {0x0D81, 0x0D83},
    {0x0DCA, 0x0DCA},
    {0x0DCF, 0x0DD4},
    {0x0DD6, 0x0DD6},
    {0x0DD8, 0x0DDF},
    {0x0DF2, 0x0DF3},
    {0x0E31, 0x0E31},
    {0x0E34, 0x0E3A},
    {0x0E47, 0x0E4E},
    {0x0EB1, 0x0EB1},
    {0x0EB4, 0x0EBC},
    {0x0EC8, 0x0ECD},
    {0x0F18, 0x0F19},
    {0x0F35, 0x0F35},
    {0x0F37, 0x0F37},
    {0x0F39, 0x0F39},
    {0x0F3E, 0x0F3F},
    {0x0F71, 0x0F84},
    {0x0F86, 0x0F87},
    {0x0F8D, 0x0F97},
    {0x0F99, 0x0FBC},
    {0x0FC6, 0x0FC6},
    {0x102B, 0x103E},
    {0x1056, 0x1059},
    {0x105E, 0x1060},
    {0x1062, 0x1064},
    {0x1067, 0x106D},
    {0x1071, 0x1074},
    {0x1082, 0x108D},
    {0x108F, 0x108F},
    {0x109A, 0x109D},
    {0x135D, 0x135F},
    {0x1712, 0x1714},
    {0x1732, 0x1734},
    {0x1752, 0x1753},
    {0x1772, 0x1773},
    {0x17B4, 0x17D3},
    {0x17DD, 0x17DD},
    {0x180B, 0x180E},
    {0x1885, 0x1886},
    {0x18A9, 0x18A9},
    {0x1920, 0x192B},
    {0x1930, 0x193B},
    {0x1A17, 0x1A1B},
    {0x1A55, 0x1A5E},
    {0x1A60, 0x1A7C},
    {0x1A7F, 0x1A7F},
    {0x1AB0, 0x1AC0},
    {0x1B00, 0x1B04},
    {0x1B34, 0x1B44},
    {0x1B6B, 0x1B73},
    {0x1B80, 0x1B82},
    {0x1BA1, 0x1BAD},
    {0x1BE6, 0x1BF3},
    {0x1C24, 0x1C37},
    {0x1CD0, 0x1CD2},
    {0x1CD4, 0x1CE8},
    {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4},
    {0x1CF7, 0x1CF9},
    {0x1DC0, 0x1DF9},
    {0x1DFB, 0x1DFF},
    {0x200B, 0x200F},
    {0x202A, 0x202E},
    {0x2060, 0x2064},
    {0x2066, 0x206F},
    {0x20D0, 0x20F0},
    {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F},
    {0x2DE0, 0x2DFF},
    {0x302A, 0x302F},
    {0x3099, 0x309A},
    {0xA66F, 0xA672},
    {0xA674, 0xA67D},
    {0xA69E, 0xA69F},
    {0xA6F0, 0xA6F1},
    {0xA802, 0xA802},
    {0xA806, 0xA806},
    {0xA80B, 0xA80B},
    {0xA823, 0xA827},
    {0xA82C, 0xA82C},
    {0xA880, 0xA881},
    {0xA8B4, 0xA8C5},
    {0xA8E0, 0xA8F1},
    {0xA8FF, 0xA8FF},
    {0xA926, 0xA92D},
    {0xA947, 0xA953},
    {0xA980, 0xA983},
    {0xA9B3, 0xA9C0},
    {0xA9E5, 0xA9E5},
    {0xAA29, 0xAA36},
    {0xAA43, 0xAA43},
    {0xAA4C, 0xAA4D},
    {0xAA7B, 0xAA7D},
    {0xAAB0, 0xAAB0},
    {0xAAB2, 0xAAB4},
    {0xAAB7, 0xAAB8},
    {0xAABE, 0xAABF},
    {0xAAC1, 0xAAC1},
    {0xAAEB, 0xAAEF},
    {0xAAF5, 0xAAF6},
    {0xABE3, 0xABEA},
    {0xABEC, 0xABED},
    {0xFB1E, 0xFB1E},
    {0xFE00, 0xFE0F},
    {0xFE20, 0xFE2F},
    {0xFEFF, 0xFEFF},
    {0xFFF9, 0xFFFB},
    {0x101FD, 0x101FD},
    {0x102E0, 0x102E0},
    {0x10376, 0x1037A},
    {0x10A01, 0x10A03},
    {0x10A05, 0x10A06},
    {0x10A0C, 0x10A0F},
    {0x10A38, 0x10A3A},
    {0x10A3F, 0x10A3F},
    {0x10AE5, 0x10AE6},
    {0x10D24, 0x10D27},
    {0x10EAB, 0x10EAC},
    {0x10F46, 0x10F50},
    {0x11000, 0x11002},
    {0x11038, 0x11046},
    {0x1107F, 0x11082},
    {0x110B0, 0x110BA},
    {0x110BD, 0x110BD},
    {0x110CD, 0x110CD},
    {0x11100, 0x11102},
    {0x11127, 0x11134},
    {0x11145, 0x11146},
    {0x11173, 0x11173},
    {0x11180, 0x11182},
    {0x111B3, 0x111C0},
    {0x111C9, 0x111CC},
    {0x111CE, 0x111CF},
    {0x1122C, 0x11237},
    {0x1123E, 0x1123E},
    {0x112DF, 0x112EA},
    {0x11300, 0x11303},
    {0x1133B, 0x1133C},
    {0x1133E, 0x11344},
    {0x11347, 0x11348},
    {0x1134B, 0x1134D},
    {0x11357, 0x11357},
    {0x11362, 0x11363},
    {0x11366, 0x1136C},
    {0x11370, 0x11374},
    {0x11435, 0x11446},
    {0x1145E, 0x1145E},
    {0x114B0, 0x114C3},
    {0x115AF, 0x115B5},
    {0x115B8, 0x115C0},
    {0x115DC, 0x115DD},
    {0x11630, 0x11640},
    {0x116AB, 0x116B7},
    {0x1171D, 0x1172B},
    {0x1182C, 0x1183A},
    {0x11930, 0x11935},
    {0x11937, 0x11938},
    {0x1193B, 0x1193E},
    {0x11940, 0x11940},
    {0x11942, 0x11943},
    {0x119D1, 0x119D7},
    {0x119DA, 0x119E0},
    {0x119E4, 0x119E4},
    {0x11A01, 0x11A0A},
    {0x11A33, 0x11A39},
    {0x11A3B, 0x11A3E},
    {0x11A47, 0x11A47},
    {0x11A51, 0x11A5B},
    {0x11A8A, 0x11A99},
    {0x11C2F, 0x11C36},
    {0x11C38, 0x11C3F},
    {0x11C92, 0x11CA7},
    {0x11CA9, 0x11CB6},
    {0x11D31, 0x11D36},
    {0x11D3A, 0x11D3A},
    {0x11D3C, 0x11D3D},
    {0x11D3F, 0x11D45},
    {0x11D47, 0x11D47},
    {0x11D8A, 0x11D8E},
    {0x11D90, 0x11D91},
    {0x11D93, 0x11D97},
    {0x11EF3, 0x11EF6},
    {0x13430, 0x13438},
    {0x16AF0, 0x16AF4},
    {0x16B30, 0x16B36},
    {0x16F4F, 0x16F4F},
    {0x16F51, 0x16F87},
    {0x16F8F, 0x16F92},
    {0x16FE4, 0x16FE4},
    {0x16FF0, 0x16FF1},
    {0x1BC9D, 0x1BC9E},
    {0x1BCA0, 0x1BCA3},
    {0x1D165, 0x1D169},
    {0x1D16D, 0x1D182},
    {0x1D185, 0x1D18B},
    {0x1D1AA, 0x1D1AD},
    {0x1D242, 0x1D244},
    {0x1DA00, 0x1DA36},
    {0x1DA3B, 0x1DA6C},
    {0x1DA75, 0x1DA75},
    {0x1DA84, 0x1DA84},
    {0x1DA9B, 0x1DA9F},
    {0x1DAA1, 0x1DAAF},
    {0x1E000, 0x1E006},
    {0x1E008, 0x1E018},
    {0x1E01B, 0x1E021},
    {0x1E023, 0x1E024},
    {0x1E026, 0x1E02A},
    {0x1E130, 0x1E136},
    {0x1E2EC, 0x1E2EF},
    {0x1E8D0, 0x1E8D6},
    {0x1E944, 0x1E94A},
    {0xE0001, 0xE0001},
    {0xE0020, 0xE007F},
    {0xE0100, 0xE01EF},
}};

inline constexpr std::array<FoldEntry, 2942> kFoldTable = {{
    {0x0041, 1, {0x0061}},
    {0x0042, 1, {0x0062}},
    {0x0043, 1, {0x0063}},
    {0x0044, 1, {0x0064}},
    {0x0045, 1, {0x0065}},
    {0x0046, 1, {0x0066}},
    {0x0047, 1, {0x0067}},
    {0x0048, 1, {0x0068}},
    {0x0049, 1, {0x0069}},
    {0x004A, 1, {0x006A}},
    {0x004B, 1, {0x006B}},
    {0x004C, 1, {0x006C}},
    {0x004D, 1, {0x006D}},
    {0x004E, 1, {0x006E}},
    {0x004F, 1, {0x006F}},
    {0x0050, 1, {0x0070}},
    {0x0051, 1, {0x0071}},
    {0x0052, 1, {0x0072}},
    {0x0053, 1, {0x0073}},
    {0x0054, 1, {0x0074}},
    {0x0055, 1, {0x0075}},
    {0x0056, 1, {0x0076}},
    {0x0057, 1, {0x0077}},
    {0x0058, 1, {0x0078}},
    {0x0059, 1, {0x0079}},
    {0x005A, 1, {0x007A}},
    {0x00B5, 1, {0x03BC}},
    {0x00C0, 1, {0x0061}},
    {0x00C1, 1, {0x0061}},
    {0x00C2, 1, {0x0061}},
    {0x00C3, 1, {0x0061}},
    {0x00C4, 1, {0x0061}},
    {0x00C5, 1, {0x0061}},
    {0x00C6, 2, {0x0061, 0x0065}},
    {0x00C7, 1, {0x0063}},
    {0x00C8, 1, {0x0065}},
    {0x00C9, 1, {0x0065}},
    {0x00CA, 1, {0x0065}},
    {0x00CB, 1, {0x0065}},
    {0x00CC, 1, {0x0069}},
    {0x00CD, 1, {0x0069}},
    {0x00CE, 1, {0x0069}},
    {0x00CF, 1, {0x0069}},
    {0x00D0, 1, {0x00F0}},
    {0x00D1, 1, {0x006E}},
    {0x00D2, 1, {0x006F}},
    {0x00D3, 1, {0x006F}},
    {0x00D4, 1, {0x006F}},
    {0x00D5, 1, {0x006F}},
    {0x00D6, 1, {0x006F}},
    {0x00D8, 1, {0x00F8}},
    {0x00D9, 1, {0x0075}},
    {0x00DA, 1, {0x0075}},
    {0x00DB, 1, {0x0075}},
    {0x00DC, 1, {0x0075}},
    {0x00DD, 1, {0x0079}},
    {0x00DE, 1, {0x00FE}},
    {0x00DF, 2, {0x0073, 0x0073}},
    {0x00E0, 1, {0x0061}},
    {0x00E1, 1, {0x0061}},
    {0x00E2, 1, {0x0061}},
    {0x00E3, 1, {0x0061}},
    {0x00E4, 1, {0x0061}},
    {0x00E5, 1, {0x0061}},
    {0x00E6, 2, {0x0061, 0x0065}},
    {0x00E7, 1, {0x0063}},
    {0x00E8, 1, {0x0065}},
    {0x00E9, 1, {0x0065}},
    {0x00EA, 1, {0x0065}},
    {0x00EB, 1, {0x0065}},
    {0x00EC, 1, {0x0069}},
    {0x00ED, 1, {0x0069}},
    {0x00EE, 1, {0x0069}},
    {0x00EF, 1, {0x0069}},
    {0x00F1, 1, {0x006E}},
    {0x00F2, 1, {0x006F}},
    {0x00F3, 1, {0x006F}},
    {0x00F4, 1, {0x006F}},
    {0x00F5, 1, {0x006F}},
    {0x00F6, 1, {0x006F}},
    {0x00F9, 1, {0x0075}},
    {0x00FA, 1, {0x0075}},
    {0x00FB, 1, {0x0075}},
    {0x00FC, 1, {0x0075}},
    {0x00FD, 1, {0x0079}},
    {0x00FF, 1, {0x0079}},
    {0x0100, 1, {0x0061}},
    {0x0101, 1, {0x0061}},
    {0x0102, 1, {0x0061}},
    {0x0103, 1, {0x0061}},
    {0x0104, 1, {0x0061}},
    {0x0105, 1, {0x0061}},
    {0x0106, 1, {0x0063}},
    {0x0107, 1, {0x0063}},
    {0x0108, 1, {0x0063}},
    {0x0109, 1, {0x0063}},
    {0x010A, 1, {0x0063}},
    {0x010B, 1, {0x0063}},
    {0x010C, 1, {0x0063}},
    {0x010D, 1, {0x0063}},
    {0x010E, 1, {0x0064}},
    {0x010F, 1, {0x0064}},
    {0x0110, 1, {0x0111}},
    {0x0112, 1, {0x0065}},
    {0x0113, 1, {0x0065}},
    {0x0114, 1, {0x0065}},
    {0x0115, 1, {0x0065}},
    {0x0116, 1, {0x0065}},
    {0x0117, 1, {0x0065}},
    {0x0118, 1, {0x0065}},
    {0x0119, 1, {0x0065}},
    {0x011A, 1, {0x0065}},
    {0x011B, 1, {0x0065}},
    {0x011C, 1, {0x0067}},
    {0x011D, 1, {0x0067}},
    {0x011E, 1, {0x0067}},
    {0x011F, 1, {0x0067}},
    {0x0120, 1, {0x0067}},
    {0x0121, 1, {0x0067}},
    {0x0122, 1, {0x0067}},
    {0x0123, 1, {0x0067}},
    {0x0124, 1, {0x0068}},
    {0x0125, 1, {0x0068}},
    {0x0126, 1, {0x0127}},
    {0x0128, 1, {0x0069}},
    {0x0129, 1, {0x0069}},
    {0x012A, 1, {0x0069}},
    {0x012B, 1, {0x0069}},
    {0x012C, 1, {0x0069}},
    {0x012D, 1, {0x0069}},
    {0x012E, 1, {0x0069}},
    {0x012F, 1, {0x0069}},
    {0x0130, 1, {0x0069}},
    {0x0132, 1, {0x0133}},
    {0x0134, 1, {0x006A}},
    {0x0135, 1, {0x006A}},
    {0x0136, 1, {0x006B}},
    {0x0137, 1, {0x006B}},
    {0x0139, 1, {0x006C}},
    {0x013A, 1, {0x006C}},
    {0x013B, 1, {0x006C}},
    {0x013C, 1, {0x006C}},
    {0x013D, 1, {0x006C}},
    {0x013E, 1, {0x006C}},
    {0x013F, 1, {0x0140}},
    {0x0141, 1, {0x0142}},
    {0x0143, 1, {0x006E}},
    {0x0144, 1, {0x006E}},
    {0x0145, 1, {0x006E}},
    {0x0146, 1, {0x006E}},
    {0x0147, 1, {0x006E}},
    {0x0148, 1, {0x006E}},
    {0x0149, 2, {0x02BC, 0x006E}},
    {0x014A, 1, {0x014B}},
    {0x014C, 1, {0x006F}},
    {0x014D, 1, {0x006F}},
    {0x014E, 1, {0x006F}},
    {0x014F, 1, {0x006F}},
    {0x0150, 1, {0x006F}},
    {0x0151, 1, {0x006F}},
    {0x0152, 2, {0x006F, 0x0065}},
    {0x0153, 2, {0x006F, 0x0065}},
    {0x0154, 1, {0x0072}},
    {0x0155, 1, {0x0072}},
    {0x0156, 1, {0x0072}},
    {0x0157, 1, {0x0072}},
    {0x0158, 1, {0x0072}},
    {0x0159, 1, {0x0072}},
    {0x015A, 1, {0x0073}},
    {0x015B, 1, {0x0073}},
    {0x015C, 1, {0x0073}},
    {0x015D, 1, {0x0073}},
    {0x015E, 1, {0x0073}},
    {0x015F, 1, {0x0073}},
    {0x0160, 1, {0x0073}},
    {0x0161, 1, {0x0073}},
    {0x0162, 1, {0x0074}},
    {0x0163, 1, {0x0074}},
    {0x0164, 1, {0x0074}},
    {0x0165, 1, {0x0074}},
    {0x0166, 1, {0x0167}},
    {0x0168, 1, {0x0075}},
    {0x0169, 1, {0x0075}},
    {0x016A, 1, {0x0075}},
    {0x016B, 1, {0x0075}},
    {0x016C, 1, {0x0075}},
    {0x016D, 1, {0x0075}},
    {0x016E, 1, {0x0075}},
    {0x016F, 1, {0x0075}},
    {0x0170, 1, {0x0075}},
    {0x0171, 1, {0x0075}},
    {0x0172, 1, {0x0075}},
    {0x0173, 1, {0x0075}},
    {0x0174, 1, {0x0077}},
    {0x0175, 1, {0x0077}},
    {0x0176, 1, {0x0079}},
    {0x0177, 1, {0x0079}},
    {0x0178, 1, {0x0079}},
    {0x0179, 1, {0x007A}},
    {0x017A, 1, {0x007A}},
    {0x017B, 1, {0x007A}},
    {0x017C, 1, {0x007A}},
    {0x017D, 1, {0x007A}},
    {0x017E, 1, {0x007A}},
    {0x017F, 1, {0x0073}},
    {0x0181, 1, {0x0253}},
    {0x0182, 1, {0x0183}},
    {0x0184, 1, {0x0185}},
    {0x0186, 1, {0x0254}},
    {0x0187, 1, {0x0188}},
    {0x0189, 1, {0x0256}},
    {0x018A, 1, {0x0257}},
    {0x018B, 1, {0x018C}},
    {0x018E, 1, {0x01DD}},
    {0x018F, 1, {0x0259}},
    {0x0190, 1, {0x025B}},
    {0x0191, 1, {0x0192}},
    {0x0193, 1, {0x0260}},
    {0x0194, 1, {0x0263}},
    {0x0196, 1, {0x0269}},
    {0x0197, 1, {0x0268}},
    {0x0198, 1, {0x0199}},
    {0x019C, 1, {0x026F}},
    {0x019D, 1, {0x0272}},
    {0x019F, 1, {0x0275}},
    {0x01A0, 1, {0x006F}},
    {0x01A1, 1, {0x006F}},
    {0x01A2, 1, {0x01A3}},
    {0x01A4, 1, {0x01A5}},
    {0x01A6, 1, {0x0280}},
    {0x01A7, 1, {0x01A8}},
    {0x01A9, 1, {0x0283}},
    {0x01AC, 1, {0x01AD}},
    {0x01AE, 1, {0x0288}},
    {0x01AF, 1, {0x0075}},
    {0x01B0, 1, {0x0075}},
    {0x01B1, 1, {0x028A}},
    {0x01B2, 1, {0x028B}},
    {0x01B3, 1, {0x01B4}},
    {0x01B5, 1, {0x01B6}},
    {0x01B7, 1, {0x0292}},
    {0x01B8, 1, {0x01B9}},
    {0x01BC, 1, {0x01BD}},
    {0x01C4, 1, {0x01C6}},
    {0x01C5, 1, {0x01C6}},
    {0x01C7, 1, {0x01C9}},
    {0x01C8, 1, {0x01C9}},
    {0x01CA, 1, {0x01CC}},
    {0x01CB, 1, {0x01CC}},
    {0x01CD, 1, {0x0061}},
    {0x01CE, 1, {0x0061}},
    {0x01CF, 1, {0x0069}},
    {0x01D0, 1, {0x0069}},
    {0x01D1, 1, {0x006F}},
    {0x01D2, 1, {0x006F}},
    {0x01D3, 1, {0x0075}},
    {0x01D4, 1, {0x0075}},
    {0x01D5, 1, {0x0075}},
    {0x01D6, 1, {0x0075}},
    {0x01D7, 1, {0x0075}},
    {0x01D8, 1, {0x0075}},
    {0x01D9, 1, {0x0075}},
    {0x01DA, 1, {0x0075}},
    {0x01DB, 1, {0x0075}},
    {0x01DC, 1, {0x0075}},
    {0x01DE, 1, {0x0061}},
    {0x01DF, 1, {0x0061}},
    {0x01E0, 1, {0x0061}},
    {0x01E1, 1, {0x0061}},
    {0x01E2, 2, {0x0061, 0x0065}},
    {0x01E3, 2, {0x0061, 0x0065}},
    {0x01E4, 1, {0x01E5}},
    {0x01E6, 1, {0x0067}},
    {0x01E7, 1, {0x0067}},
    {0x01E8, 1, {0x006B}},
    {0x01E9, 1, {0x006B}},
    {0x01EA, 1, {0x006F}},
    {0x01EB, 1, {0x006F}},
    {0x01EC, 1, {0x006F}},
    {0x01ED, 1, {0x006F}},
    {0x01EE, 1, {0x0292}},
    {0x01EF, 1, {0x0292}},
    {0x01F0, 1, {0x006A}},
    {0x01F1, 1, {0x01F3}},
    {0x01F2, 1, {0x01F3}},
    {0x01F4, 1, {0x0067}},
    {0x01F5, 1, {0x0067}},
    {0x01F6, 1, {0x0195}},
    {0x01F7, 1, {0x01BF}},
    {0x01F8, 1, {0x006E}},
    {0x01F9, 1, {0x006E}},
    {0x01FA, 1, {0x0061}},
    {0x01FB, 1, {0x0061}},
    {0x01FC, 2, {0x0061, 0x0065}},
    {0x01FD, 2, {0x0061, 0x0065}},
    {0x01FE, 1, {0x00F8}},
    {0x01FF, 1, {0x00F8}},
    {0x0200, 1, {0x0061}},
    {0x0201, 1, {0x0061}},
    {0x0202, 1, {0x0061}},
    {0x0203, 1, {0x0061}},
    {0x0204, 1, {0x0065}},
    {0x0205, 1, {0x0065}},
    {0x0206, 1, {0x0065}},
    {0x0207, 1, {0x0065}},
    {0x0208, 1, {0x0069}},
    {0x0209, 1, {0x0069}},
    {0x020A, 1, {0x0069}},
    {0x020B, 1, {0x0069}},
    {0x020C, 1, {0x006F}},
    {0x020D, 1, {0x006F}},
    {0x020E, 1, {0x006F}},
    {0x020F, 1, {0x006F}},
    {0x0210, 1, {0x0072}},
    {0x0211, 1, {0x0072}},
    {0x0212, 1, {0x0072}},
    {0x0213, 1, {0x0072}},
    {0x0214, 1, {0x0075}},
    {0x0215, 1, {0x0075}},
    {0x0216, 1, {0x0075}},
    {0x0217, 1, {0x0075}},
    {0x0218, 1, {0x0073}},
    {0x0219, 1, {0x0073}},
    {0x021A, 1, {0x0074}},
    {0x021B, 1, {0x0074}},
    {0x021C, 1, {0x021D}},
    {0x021E, 1, {0x0068}},
    {0x021F, 1, {0x0068}},
    {0x0220, 1, {0x019E}},
    {0x0222, 1, {0x0223}},
    {0x0224, 1, {0x0225}},
    {0x0226, 1, {0x0061}},
    {0x0227, 1, {0x0061}},
    {0x0228, 1, {0x0065}},
    {0x0229, 1, {0x0065}},
    {0x022A, 1, {0x006F}},
    {0x022B, 1, {0x006F}},
    {0x022C, 1, {0x006F}},
    {0x022D, 1, {0x006F}},
    {0x022E, 1, {0x006F}},
    {0x022F, 1, {0x006F}},
    {0x0230, 1, {0x006F}},
    {0x0231, 1, {0x006F}},
    {0x0232, 1, {0x0079}},
    {0x0233, 1, {0x0079}},
    {0x023A, 1, {0x2C65}},
    {0x023B, 1, {0x023C}},
    {0x023D, 1, {0x019A}},
    {0x023E, 1, {0x2C66}},
    {0x0241, 1, {0x0242}},
    {0x0243, 1, {0x0180}},
    {0x0244, 1, {0x0289}},
    {0x0245, 1, {0x028C}},
    {0x0246, 1, {0x0247}},
    {0x0248, 1, {0x0249}},
    {0x024A, 1, {0x024B}},
    {0x024C, 1, {0x024D}},
    {0x024E, 1, {0x024F}},
    {0x0370, 1, {0x0371}},
    {0x0372, 1, {0x0373}},
    {0x0374, 1, {0x02B9}},
    {0x0376, 1, {0x0377}},
    {0x037F, 1, {0x03F3}},
    {0x0386, 1, {0x03B1}},
    {0x0388, 1, {0x03B5}},
    {0x0389, 1, {0x03B7}},
    {0x038A, 1, {0x03B9}},
    {0x038C, 1, {0x03BF}},
    {0x038E, 1, {0x03C5}},
    {0x038F, 1, {0x03C9}},
    {0x0390, 1, {0x03B9}},
    {0x0391, 1, {0x03B1}},
    {0x0392, 1, {0x03B2}},
    {0x0393, 1, {0x03B3}},
    {0x0394, 1, {0x03B4}},
    {0x0395, 1, {0x03B5}},
    {0x0396, 1, {0x03B6}},
    {0x0397, 1, {0x03B7}},
    {0x0398, 1, {0x03B8}},
    {0x0399, 1, {0x03B9}},
    {0x039A, 1, {0x03BA}},
    {0x039B, 1, {0x03BB}},
    {0x039C, 1, {0x03BC}},
    {0x039D, 1, {0x03BD}},
    {0x039E, 1, {0x03BE}},
    {0x039F, 1, {0x03BF}},
    {0x03A0, 1, {0x03C0}},
    {0x03A1, 1, {0x03C1}},
    {0x03A3, 1, {0x03C3}},
    {0x03A4, 1, {0x03C4}},
    {0x03A5, 1, {0x03C5}},
    {0x03A6, 1, {0x03C6}},
    {0x03A7, 1, {0x03C7}},
    {0x03A8, 1, {0x03C8}},
    {0x03A9, 1, {0x03C9}},
    {0x03AA, 1, {0x03B9}},
    {0x03AB, 1, {0x03C5}},
    {0x03AC, 1, {0x03B1}},
    {0x03AD, 1, {0x03B5}},
    {0x03AE, 1, {0x03B7}},
    {0x03AF, 1, {0x03B9}},
    {0x03B0, 1, {0x03C5}},
    {0x03C2, 1, {0x03C3}},
    {0x03CA, 1, {0x03B9}},
    {0x03CB, 1, {0x03C5}},
    {0x03CC, 1, {0x03BF}},
    {0x03CD, 1, {0x03C5}},
    {0x03CE, 1, {0x03C9}},
    {0x03CF, 1, {0x03D7}},
    {0x03D0, 1, {0x03B2}},
    {0x03D1, 1, {0x03B8}},
    {0x03D3, 1, {0x03D2}},
    {0x03D4, 1, {0x03D2}},
    {0x03D5, 1, {0x03C6}},
    {0x03D6, 1, {0x03C0}},
    {0x03D8, 1, {0x03D9}},
    {0x03DA, 1, {0x03DB}},
    {0x03DC, 1, {0x03DD}},
    {0x03DE, 1, {0x03DF}},
    {0x03E0, 1, {0x03E1}},
    {0x03E2, 1, {0x03E3}},
    {0x03E4, 1, {0x03E5}},
    {0x03E6, 1, {0x03E7}},
    {0x03E8, 1, {0x03E9}},
    {0x03EA, 1, {0x03EB}},
    {0x03EC, 1, {0x03ED}},
    {0x03EE, 1, {0x03EF}},
    {0x03F0, 1, {0x03BA}},
    {0x03F1, 1, {0x03C1}},
    {0x03F4, 1, {0x03B8}},
    {0x03F5, 1, {0x03B5}},
    {0x03F7, 1, {0x03F8}},
    {0x03F9, 1, {0x03F2}},
    {0x03FA, 1, {0x03FB}},
    {0x03FD, 1, {0x037B}},
    {0x03FE, 1, {0x037C}},
    {0x03FF, 1, {0x037D}},
    {0x0400, 1, {0x0435}},
    {0x0401, 1, {0x0435}},
    {0x0402, 1, {0x0452}},
    {0x0403, 1, {0x0433}},
    {0x0404, 1, {0x0454}},
    {0x0405, 1, {0x0455}},
    {0x0406, 1, {0x0456}},
    {0x0407, 1, {0x0456}},
    {0x0408, 1, {0x0458}},
    {0x0409, 1, {0x0459}},
    {0x040A, 1, {0x045A}},
    {0x040B, 1, {0x045B}},
    {0x040C, 1, {0x043A}},
    {0x040D, 1, {0x0438}},
    {0x040E, 1, {0x0443}},
    {0x040F, 1, {0x045F}},
    {0x0410, 1, {0x0430}},
    {0x0411, 1, {0x0431}},
    {0x0412, 1, {0x0432}},
    {0x0413, 1, {0x0433}},
    {0x0414, 1, {0x0434}},
    {0x0415, 1, {0x0435}},
    {0x0416, 1, {0x0436}},
    {0x0417, 1, {0x0437}},
    {0x0418, 1, {0x0438}},
    {0x0419, 1, {0x0438}},
    {0x041A, 1, {0x043A}},
    {0x041B, 1, {0x043B}},
    {0x041C, 1, {0x043C}},
    {0x041D, 1, {0x043D}},
    {0x041E, 1, {0x043E}},
    {0x041F, 1, {0x043F}},
    {0x0420, 1, {0x0440}},
    {0x0421, 1, {0x0441}},
    {0x0422, 1, {0x0442}},
    {0x0423, 1, {0x0443}},
    {0x0424, 1, {0x0444}},
    {0x0425, 1, {0x0445}},
    {0x0426, 1, {0x0446}},
    {0x0427, 1, {0x0447}},
    {0x0428, 1, {0x0448}},
    {0x0429, 1, {0x0449}},
    {0x042A, 1, {0x044A}},
    {0x042B, 1, {0x044B}},
    {0x042C, 1, {0x044C}},
    {0x042D, 1, {0x044D}},
    {0x042E, 1, {0x044E}},
    {0x042F, 1, {0x044F}},
    {0x0439, 1, {0x0438}},
    {0x0450, 1, {0x0435}},
    {0x0451, 1, {0x0435}},
    {0x0453, 1, {0x0433}},
    {0x0457, 1, {0x0456}},
    {0x045C, 1, {0x043A}},
    {0x045D, 1, {0x0438}},
    {0x045E, 1, {0x0443}},
    {0x0460, 1, {0x0461}},
    {0x0462, 1, {0x0463}},
    {0x0464, 1, {0x0465}},
    {0x0466, 1, {0x0467}},
    {0x0468, 1, {0x0469}},
    {0x046A, 1, {0x046B}},
    {0x046C, 1, {0x046D}},
    {0x046E, 1, {0x046F}},
    {0x0470, 1, {0x0471}},
    {0x0472, 1, {0x0473}},
    {0x0474, 1, {0x0475}},
    {0x0476, 1, {0x0475}},
    {0x0477, 1, {0x0475}},
    {0x0478, 1, {0x0479}},
    {0x047A, 1, {0x047B}},
    {0x047C, 1, {0x047D}},
    {0x047E, 1, {0x047F}},
    {0x0480, 1, {0x0481}},
    {0x048A, 1, {0x048B}},
    {0x048C, 1, {0x048D}},
    {0x048E, 1, {0x048F}},
    {0x0490, 1, {0x0491}},
    {0x0492, 1, {0x0493}},
    {0x0494, 1, {0x0495}},
    {0x0496, 1, {0x0497}},
    {0x0498, 1, {0x0499}},
    {0x049A, 1, {0x049B}},
    {0x049C, 1, {0x049D}},
    {0x049E, 1, {0x049F}},
    {0x04A0, 1, {0x04A1}},
    {0x04A2, 1, {0x04A3}},
    {0x04A4, 1, {0x04A5}},
    {0x04A6, 1, {0x04A7}},
    {0x04A8, 1, {0x04A9}},
    {0x04AA, 1, {0x04AB}},
    {0x04AC, 1, {0x04AD}},
    {0x04AE, 1, {0x04AF}},
    {0x04B0, 1, {0x04B1}},
    {0x04B2, 1, {0x04B3}},
    {0x04B4, 1, {0x04B5}},
    {0x04B6, 1, {0x04B7}},
    {0x04B8, 1, {0x04B9}},
    {0x04BA, 1, {0x04BB}},
    {0x04BC, 1, {0x04BD}},
    {0x04BE, 1, {0x04BF}},
    {0x04C0, 1, {0x04CF}},
    {0x04C1, 1, {0x0436}},
    {0x04C2, 1, {0x0436}},
    {0x04C3, 1, {0x04C4}},
    {0x04C5, 1, {0x04C6}},
    {0x04C7, 1, {0x04C8}},
    {0x04C9, 1, {0x04CA}},
    {0x04CB, 1, {0x04CC}},
    {0x04CD, 1, {0x04CE}},
    {0x04D0, 1, {0x0430}},
    {0x04D1, 1, {0x0430}},
    {0x04D2, 1, {0x0430}},
    {0x04D3, 1, {0x0430}},
    {0x04D4, 1, {0x04D5}},
    {0x04D6, 1, {0x0435}},
    {0x04D7, 1, {0x0435}},
    {0x04D8, 1, {0x04D9}},
    {0x04DA, 1, {0x04D9}},
    {0x04DB, 1, {0x04D9}},
    {0x04DC, 1, {0x0436}},
    {0x04DD, 1, {0x0436}},
    {0x04DE, 1, {0x0437}},
    {0x04DF, 1, {0x0437}},
    {0x04E0, 1, {0x04E1}},
    {0x04E2, 1, {0x0438}},
    {0x04E3, 1, {0x0438}},
    {0x04E4, 1, {0x0438}},
    {0x04E5, 1, {0x0438}},
    {0x04E6, 1, {0x043E}},
    {0x04E7, 1, {0x043E}},
    {0x04E8, 1, {0x04E9}},
    {0x04EA, 1, {0x04E9}},
    {0x04EB, 1, {0x04E9}},
    {0x04EC, 1, {0x044D}},
    {0x04ED, 1, {0x044D}},
    {0x04EE, 1, {0x0443}},
    {0x04EF, 1, {0x0443}},
    {0x04F0, 1, {0x0443}},
    {0x04F1, 1, {0x0443}},
    {0x04F2, 1, {0x0443}},
    {0x04F3, 1, {0x0443}},
    {0x04F4, 1, {0x0447}},
    {0x04F5, 1, {0x0447}},
    {0x04F6, 1, {0x04F7}},
    {0x04F8, 1, {0x044B}},
    {0x04F9, 1, {0x044B}},
    {0x04FA, 1, {0x04FB}},
    {0x04FC, 1, {0x04FD}},
    {0x04FE, 1, {0x04FF}},
    {0x0500, 1, {0x0501}},
    {0x0502, 1, {0x0503}},
    {0x0504, 1, {0x0505}},
    {0x0506, 1, {0x0507}},
    {0x0508, 1, {0x0509}},
    {0x050A, 1, {0x050B}},
    {0x050C, 1, {0x050D}},
    {0x050E, 1, {0x050F}},
    {0x0510, 1, {0x0511}},
    {0x0512, 1, {0x0513}},
    {0x0514, 1, {0x0515}},
    {0x0516, 1, {0x0517}},
    {0x0518, 1, {0x0519}},
    {0x051A, 1, {0x051B}},
    {0x051C, 1, {0x051D}},
    {0x051E, 1, {0x051F}},
    {0x0520, 1, {0x0521}},
    {0x0522, 1, {0x0523}},
    {0x0524, 1, {0x0525}},
    {0x0526, 1, {0x0527}},
    {0x0528, 1, {0x0529}},
    {0x052A, 1, {0x052B}},
    {0x052C, 1, {0x052D}},
    {0x052E, 1, {0x052F}},
    {0x0531, 1, {0x0561}},
    {0x0532, 1, {0x0562}},
    {0x0533, 1, {0x0563}},
    {0x0534, 1, {0x0564}},
    {0x0535, 1, {0x0565}},
    {0x0536, 1, {0x0566}},
    {0x0537, 1, {0x0567}},
    {0x0538, 1, {0x0568}},
    {0x0539, 1, {0x0569}},
    {0x053A, 1, {0x056A}},
    {0x053B, 1, {0x056B}},
    {0x053C, 1, {0x056C}},
    {0x053D, 1, {0x056D}},
    {0x053E, 1, {0x056E}},
    {0x053F, 1, {0x056F}},
    {0x0540, 1, {0x0570}},
    {0x0541, 1, {0x0571}},
    {0x0542, 1, {0x0572}},
    {0x0543, 1, {0x0573}},
    {0x0544, 1, {0x0574}},
    {0x0545, 1, {0x0575}},
    {0x0546, 1, {0x0576}},
    {0x0547, 1, {0x0577}},
    {0x0548, 1, {0x0578}},
    {0x0549, 1, {0x0579}},
    {0x054A, 1, {0x057A}},
    {0x054B, 1, {0x057B}},
    {0x054C, 1, {0x057C}},
    {0x054D, 1, {0x057D}},
    {0x054E, 1, {0x057E}},
    {0x054F, 1, {0x057F}},
    {0x0550, 1, {0x0580}},
    {0x0551, 1, {0x0581}},
    {0x0552, 1, {0x0582}},
    {0x0553, 1, {0x0583}},
    {0x0554, 1, {0x0584}},
    {0x0555, 1, {0x0585}},
    {0x0556, 1, {0x0586}},
    {0x0587, 2, {0x0565, 0x0582}},
    {0x0622, 1, {0x0627}},
    {0x0623, 1, {0x0627}},
    {0x0624, 1, {0x0648}},
    {0x0625, 1, {0x0627}},
    {0x0626, 1, {0x064A}},
    {0x06C0, 1, {0x06D5}},
    {0x06C2, 1, {0x06C1}},
    {0x06D3, 1, {0x06D2}},
    {0x0929, 1, {0x0928}},
    {0x0931, 1, {0x0930}},
    {0x0934, 1, {0x0933}},
    {0x0958, 1, {0x0915}},
    {0x0959, 1, {0x0916}},
    {0x095A, 1, {0x0917}},
    {0x095B, 1, {0x091C}},
    {0x095C, 1, {0x0921}},
    {0x095D, 1, {0x0922}},
    {0x095E, 1, {0x092B}},
    {0x095F, 1, {0x092F}},
    {0x09DC, 1, {0x09A1}},
    {0x09DD, 1, {0x09A2}},
    {0x09DF, 1, {0x09AF}},
    {0x0A33, 1, {0x0A32}},
    {0x0A36, 1, {0x0A38}},
    {0x0A59, 1, {0x0A16}},
    {0x0A5A, 1, {0x0A17}},
    {0x0A5B, 1, {0x0A1C}},
    {0x0A5E, 1, {0x0A2B}},
    {0x0B5C, 1, {0x0B21}},
    {0x0B5D, 1, {0x0B22}},
    {0x0B94, 1, {0x0B92}},
    {0x0F43, 1, {0x0F42}},
    {0x0F4D, 1, {0x0F4C}},
    {0x0F52, 1, {0x0F51}},
    {0x0F57, 1, {0x0F56}},
    {0x0F5C, 1, {0x0F5B}},
    {0x0F69, 1, {0x0F40}},
    {0x1026, 1, {0x1025}},
    {0x10A0, 1, {0x2D00}},
    {0x10A1, 1, {0x2D01}},
    {0x10A2, 1, {0x2D02}},
    {0x10A3, 1, {0x2D03}},
    {0x10A4, 1, {0x2D04}},
    {0x10A5, 1, {0x2D05}},
    {0x10A6, 1, {0x2D06}},
    {0x10A7, 1, {0x2D07}},
    {0x10A8, 1, {0x2D08}},
    {0x10A9, 1, {0x2D09}},
    {0x10AA, 1, {0x2D0A}},
    {0x10AB, 1, {0x2D0B}},
    {0x10AC, 1, {0x2D0C}},
    {0x10AD, 1, {0x2D0D}},
    {0x10AE, 1, {0x2D0E}},
    {0x10AF, 1, {0x2D0F}},
    {0x10B0, 1, {0x2D10}},
    {0x10B1, 1, {0x2D11}},
    {0x10B2, 1, {0x2D12}},
    {0x10B3, 1, {0x2D13}},
    {0x10B4, 1, {0x2D14}},
    {0x10B5, 1, {0x2D15}},
    {0x10B6, 1, {0x2D16}},
    {0x10B7, 1, {0x2D17}},
    {0x10B8, 1, {0x2D18}},
    {0x10B9, 1, {0x2D19}},
    {0x10BA, 1, {0x2D1A}},
    {0x10BB, 1, {0x2D1B}},
    {0x10BC, 1, {0x2D1C}},
    {0x10BD, 1, {0x2D1D}},
    {0x10BE, 1, {0x2D1E}},
    {0x10BF, 1, {0x2D1F}},
    {0x10C0, 1, {0x2D20}},
    {0x10C1, 1, {0x2D21}},
    {0x10C2, 1, {0x2D22}},
    {0x10C3, 1, {0x2D23}},
    {0x10C4, 1, {0x2D24}},
    {0x10C5, 1, {0x2D25}},
    {0x10C7, 1, {0x2D27}},
    {0x10CD, 1, {0x2D2D}},
    {0x13F8, 1, {0x13F0}},
    {0x13F9, 1, {0x13F1}},
    {0x13FA, 1, {0x13F2}},
    {0x13FB, 1, {0x13F3}},
    {0x13FC, 1, {0x13F4}},
    {0x13FD, 1, {0x13F5}},
    {0x1B06, 1, {0x1B05}},
    {0x1B08, 1, {0x1B07}},
    {0x1B0A, 1, {0x1B09}},
    {0x1B0C, 1, {0x1B0B}},
    {0x1B0E, 1, {0x1B0D}},
    {0x1B12, 1, {0x1B11}},
    {0x1C80, 1, {0x0432}},
    {0x1C81, 1, {0x0434}},
    {0x1C82, 1, {0x043E}},
    {0x1C83, 1, {0x0441}},
    {0x1C84, 1, {0x0442}},
    {0x1C85, 1, {0x0442}},
    {0x1C86, 1, {0x044A}},
    {0x1C87, 1, {0x0463}},
    {0x1C88, 1, {0xA64B}},
    {0x1C90, 1, {0x10D0}},
    {0x1C91, 1, {0x10D1}},
    {0x1C92, 1, {0x10D2}},
    {0x1C93, 1, {0x10D3}},
    {0x1C94, 1, {0x10D4}},
    {0x1C95, 1, {0x10D5}},
    {0x1C96, 1, {0x10D6}},
    {0x1C97, 1, {0x10D7}},
    {0x1C98, 1, {0x10D8}},
    {0x1C99, 1, {0x10D9}},
    {0x1C9A, 1, {0x10DA}},
    {0x1C9B, 1, {0x10DB}},
    {0x1C9C, 1, {0x10DC}},
    {0x1C9D, 1, {0x10DD}},
    {0x1C9E, 1, {0x10DE}},
    {0x1C9F, 1, {0x10DF}},
    {0x1CA0, 1, {0x10E0}},
    {0x1CA1, 1, {0x10E1}},
    {0x1CA2, 1, {0x10E2}},
    {0x1CA3, 1, {0x10E3}},
    {0x1CA4, 1, {0x10E4}},
    {0x1CA5, 1, {0x10E5}},
    {0x1CA6, 1, {0x10E6}},
    {0x1CA7, 1, {0x10E7}},
    {0x1CA8, 1, {0x10E8}},
    {0x1CA9, 1, {0x10E9}},
    {0x1CAA, 1, {0x10EA}},
    {0x1CAB, 1, {0x10EB}},
    {0x1CAC, 1, {0x10EC}},
    {0x1CAD, 1, {0x10ED}},
    {0x1CAE, 1, {0x10EE}},
    {0x1CAF, 1, {0x10EF}},
    {0x1CB0, 1, {0x10F0}},
    {0x1CB1, 1, {0x10F1}},
    {0x1CB2, 1, {0x10F2}},
    {0x1CB3, 1, {0x10F3}},
    {0x1CB4, 1, {0x10F4}},
    {0x1CB5, 1, {0x10F5}},
    {0x1CB6, 1, {0x10F6}},
    {0x1CB7, 1, {0x10F7}},
    {0x1CB8, 1, {0x10F8}},
    {0x1CB9, 1, {0x10F9}},
    {0x1CBA, 1, {0x10FA}},
    {0x1CBD, 1, {0x10FD}},
    {0x1CBE, 1, {0x10FE}},
    {0x1CBF, 1, {0x10FF}},
    {0x1E00, 1, {0x0061}},
    {0x1E01, 1, {0x0061}},
    {0x1E02, 1, {0x0062}},
    {0x1E03, 1, {0x0062}},
    {0x1E04, 1, {0x0062}},
    {0x1E05, 1, {0x0062}},
    {0x1E06, 1, {0x0062}},
    {0x1E07, 1, {0x0062}},
    {0x1E08, 1, {0x0063}},
    {0x1E09, 1, {0x0063}},
    {0x1E0A, 1, {0x0064}},
    {0x1E0B, 1, {0x0064}},
    {0x1E0C, 1, {0x0064}},
    {0x1E0D, 1, {0x0064}},
    {0x1E0E, 1, {0x0064}},
    {0x1E0F, 1, {0x0064}},
    {0x1E10, 1, {0x0064}},
    {0x1E11, 1, {0x0064}},
    {0x1E12, 1, {0x0064}},
    {0x1E13, 1, {0x0064}},
    {0x1E14, 1, {0x0065}},
    {0x1E15, 1, {0x0065}},
    {0x1E16, 1, {0x0065}},
    {0x1E17, 1, {0x0065}},
    {0x1E18, 1, {0x0065}},
    {0x1E19, 1, {0x0065}},
    {0x1E1A, 1, {0x0065}},
    {0x1E1B, 1, {0x0065}},
    {0x1E1C, 1, {0x0065}},
    {0x1E1D, 1, {0x0065}},
    {0x1E1E, 1, {0x0066}},
    {0x1E1F, 1, {0x0066}},
    {0x1E20, 1, {0x0067}},
    {0x1E21, 1, {0x0067}},
    {0x1E22, 1, {0x0068}},
    {0x1E23, 1, {0x0068}},
    {0x1E24, 1, {0x0068}},
    {0x1E25, 1, {0x0068}},
    {0x1E26, 1, {0x0068}},
    {0x1E27, 1, {0x0068}},
    {0x1E28, 1, {0x0068}},
    {0x1E29, 1, {0x0068}},
    {0x1E2A, 1, {0x0068}},
    {0x1E2B, 1, {0x0068}},
    {0x1E2C, 1, {0x0069}},
    {0x1E2D, 1, {0x0069}},
    {0x1E2E, 1, {0x0069}},
    {0x1E2F, 1, {0x0069}},
    {0x1E30, 1, {0x006B}},
    {0x1E31, 1, {0x006B}},
    {0x1E32, 1, {0x006B}},
    {0x1E33, 1, {0x006B}},
    {0x1E34, 1, {0x006B}},
    {0x1E35, 1, {0x006B}},
    {0x1E36, 1, {0x006C}},
    {0x1E37, 1, {0x006C}},
    {0x1E38, 1, {0x006C}},
    {0x1E39, 1, {0x006C}},
    {0x1E3A, 1, {0x006C}},
    {0x1E3B, 1, {0x006C}},
    {0x1E3C, 1, {0x006C}},
    {0x1E3D, 1, {0x006C}},
    {0x1E3E, 1, {0x006D}},
    {0x1E3F, 1, {0x006D}},
    {0x1E40, 1, {0x006D}},
    {0x1E41, 1, {0x006D}},
    {0x1E42, 1, {0x006D}},
    {0x1E43, 1, {0x006D}},
    {0x1E44, 1, {0x006E}},
    {0x1E45, 1, {0x006E}},
    {0x1E46, 1, {0x006E}},
    {0x1E47, 1, {0x006E}},
    {0x1E48, 1, {0x006E}},
    {0x1E49, 1, {0x006E}},
    {0x1E4A, 1, {0x006E}},
    {0x1E4B, 1, {0x006E}},
    {0x1E4C, 1, {0x006F}},
    {0x1E4D, 1, {0x006F}},
    {0x1E4E, 1, {0x006F}},
    {0x1E4F, 1, {0x006F}},
    {0x1E50, 1, {0x006F}},
    {0x1E51, 1, {0x006F}},
    {0x1E52, 1, {0x006F}},
    {0x1E53, 1, {0x006F}},
    {0x1E54, 1, {0x0070}},
    {0x1E55, 1, {0x0070}},
    {0x1E56, 1, {0x0070}},
    {0x1E57, 1, {0x0070}},
    {0x1E58, 1, {0x0072}},
    {0x1E59, 1, {0x0072}},
    {0x1E5A, 1, {0x0072}},
    {0x1E5B, 1, {0x0072}},
    {0x1E5C, 1, {0x0072}},
    {0x1E5D, 1, {0x0072}},
    {0x1E5E, 1, {0x0072}},
    {0x1E5F, 1, {0x0072}},
    {0x1E60, 1, {0x0073}},
    {0x1E61, 1, {0x0073}},
    {0x1E62, 1, {0x0073}},
    {0x1E63, 1, {0x0073}},
    {0x1E64, 1, {0x0073}},
    {0x1E65, 1, {0x0073}},
    {0x1E66, 1, {0x0073}},
    {0x1E67, 1, {0x0073}},
    {0x1E68, 1, {0x0073}},
    {0x1E69, 1, {0x0073}},
    {0x1E6A, 1, {0x0074}},
    {0x1E6B, 1, {0x0074}},
    {0x1E6C, 1, {0x0074}},
    {0x1E6D, 1, {0x0074}},
    {0x1E6E, 1, {0x0074}},
    {0x1E6F, 1, {0x0074}},
    {0x1E70, 1, {0x0074}},
    {0x1E71, 1, {0x0074}},
    {0x1E72, 1, {0x0075}},
    {0x1E73, 1, {0x0075}},
    {0x1E74, 1, {0x0075}},
    {0x1E75, 1, {0x0075}},
    {0x1E76, 1, {0x0075}},
    {0x1E77, 1, {0x0075}},
    {0x1E78, 1, {0x0075}},
    {0x1E79, 1, {0x0075}},
    {0x1E7A, 1, {0x0075}},
    {0x1E7B, 1, {0x0075}},
    {0x1E7C, 1, {0x0076}},
    {0x1E7D, 1, {0x0076}},
    {0x1E7E, 1, {0x0076}},
    {0x1E7F, 1, {0x0076}},
    {0x1E80, 1, {0x0077}},
    {0x1E81, 1, {0x0077}},
    {0x1E82, 1, {0x0077}},
    {0x1E83, 1, {0x0077}},
    {0x1E84, 1, {0x0077}},
    {0x1E85, 1, {0x0077}},
    {0x1E86, 1, {0x0077}},
    {0x1E87, 1, {0x0077}},
    {0x1E88, 1, {0x0077}},
    {0x1E89, 1, {0x0077}},
    {0x1E8A, 1, {0x0078}},
    {0x1E8B, 1, {0x0078}},
    {0x1E8C, 1, {0x0078}},
    {0x1E8D, 1, {0x0078}},
    {0x1E8E, 1, {0x0079}},
    {0x1E8F, 1, {0x0079}},
    {0x1E90, 1, {0x007A}},
    {0x1E91, 1, {0x007A}},
    {0x1E92, 1, {0x007A}},
    {0x1E93, 1, {0x007A}},
    {0x1E94, 1, {0x007A}},
    {0x1E95, 1, {0x007A}},
    {0x1E96, 1, {0x0068}},
    {0x1E97, 1, {0x0074}},
    {0x1E98, 1, {0x0077}},
    {0x1E99, 1, {0x0079}},
    {0x1E9A, 2, {0x0061, 0x02BE}},
    {0x1E9B, 1, {0x0073}},
    {0x1E9E, 2, {0x0073, 0x0073}},
    {0x1EA0, 1, {0x0061}},
    {0x1EA1, 1, {0x0061}},
    {0x1EA2, 1, {0x0061}},
    {0x1EA3, 1, {0x0061}},
    {0x1EA4, 1, {0x0061}},
    {0x1EA5, 1, {0x0061}},
    {0x1EA6, 1, {0x0061}},
    {0x1EA7, 1, {0x0061}},
    {0x1EA8, 1, {0x0061}},
    {0x1EA9, 1, {0x0061}},
    {0x1EAA, 1, {0x0061}},
    {0x1EAB, 1, {0x0061}},
    {0x1EAC, 1, {0x0061}},
    {0x1EAD, 1, {0x0061}},
    {0x1EAE, 1, {0x0061}},
    {0x1EAF, 1, {0x0061}},
    {0x1EB0, 1, {0x0061}},
    {0x1EB1, 1, {0x0061}},
    {0x1EB2, 1, {0x0061}},
    {0x1EB3, 1, {0x0061}},
    {0x1EB4, 1, {0x0061}},
    {0x1EB5, 1, {0x0061}},
    {0x1EB6, 1, {0x0061}},
    {0x1EB7, 1, {0x0061}},
    {0x1EB8, 1, {0x0065}},
    {0x1EB9, 1, {0x0065}},
    {0x1EBA, 1, {0x0065}},
    {0x1EBB, 1, {0x0065}},
    {0x1EBC, 1, {0x0065}},
    {0x1EBD, 1, {0x0065}},
    {0x1EBE, 1, {0x0065}},
    {0x1EBF, 1, {0x0065}},
    {0x1EC0, 1, {0x0065}},
    {0x1EC1, 1, {0x0065}},
    {0x1EC2, 1, {0x0065}},
    {0x1EC3, 1, {0x0065}},
    {0x1EC4, 1, {0x0065}},
    {0x1EC5, 1, {0x0065}},
    {0x1EC6, 1, {0x0065}},
    {0x1EC7, 1, {0x0065}},
    {0x1EC8, 1, {0x0069}},
    {0x1EC9, 1, {0x0069}},
    {0x1ECA, 1, {0x0069}},
    {0x1ECB, 1, {0x0069}},
    {0x1ECC, 1, {0x006F}},
    {0x1ECD, 1, {0x006F}},
    {0x1ECE, 1, {0x006F}},
    {0x1ECF, 1, {0x006F}},
    {0x1ED0, 1, {0x006F}},
    {0x1ED1, 1, {0x006F}},
    {0x1ED2, 1, {0x006F}},
    {0x1ED3, 1, {0x006F}},
    {0x1ED4, 1, {0x006F}},
    {0x1ED5, 1, {0x006F}},
    {0x1ED6, 1, {0x006F}},
    {0x1ED7, 1, {0x006F}},
    {0x1ED8, 1, {0x006F}},
    {0x1ED9, 1, {0x006F}},
    {0x1EDA, 1, {0x006F}},
    {0x1EDB, 1, {0x006F}},
    {0x1EDC, 1, {0x006F}},
    {0x1EDD, 1, {0x006F}},
    {0x1EDE, 1, {0x006F}},
    {0x1EDF, 1, {0x006F}},
    {0x1EE0, 1, {0x006F}},
    {0x1EE1, 1, {0x006F}},
    {0x1EE2, 1, {0x006F}},
    {0x1EE3, 1, {0x006F}},
    {0x1EE4, 1, {0x0075}},
    {0x1EE5, 1, {0x0075}},
    {0x1EE6, 1, {0x0075}},
    {0x1EE7, 1, {0x0075}},
    {0x1EE8, 1, {0x0075}},
    {0x1EE9, 1, {0x0075}},
    {0x1EEA, 1, {0x0075}},
    {0x1EEB, 1, {0x0075}},
    {0x1EEC, 1, {0x0075}},
    {0x1EED, 1, {0x0075}},
    {0x1EEE, 1, {0x0075}},
    {0x1EEF, 1, {0x0075}},
    {0x1EF0, 1, {0x0075}},
    {0x1EF1, 1, {0x0075}},
    {0x1EF2, 1, {0x0079}},
    {0x1EF3, 1, {0x0079}},
    {0x1EF4, 1, {0x0079}},
    {0x1EF5, 1, {0x0079}},
    {0x1EF6, 1, {0x0079}},
    {0x1EF7, 1, {0x0079}},
    {0x1EF8, 1, {0x0079}},
    {0x1EF9, 1, {0x0079}},
    {0x1EFA, 1, {0x1EFB}},
    {0x1EFC, 1, {0x1EFD}},
    {0x1EFE, 1, {0x1EFF}},
    {0x1F00, 1, {0x03B1}},
    {0x1F01, 1, {0x03B1}},
    {0x1F02, 1, {0x03B1}},
    {0x1F03, 1, {0x03B1}},
    {0x1F04, 1, {0x03B1}},
    {0x1F05, 1, {0x03B1}},
    {0x1F06, 1, {0x03B1}},
    {0x1F07, 1, {0x03B1}},
    {0x1F08, 1, {0x03B1}},
    {0x1F09, 1, {0x03B1}},
    {0x1F0A, 1, {0x03B1}},
    {0x1F0B, 1, {0x03B1}},
    {0x1F0C, 1, {0x03B1}},
    {0x1F0D, 1, {0x03B1}},
    {0x1F0E, 1, {0x03B1}},
    {0x1F0F, 1, {0x03B1}},
    {0x1F10, 1, {0x03B5}},
    {0x1F11, 1, {0x03B5}},
    {0x1F12, 1, {0x03B5}},
    {0x1F13, 1, {0x03B5}},
    {0x1F14, 1, {0x03B5}},
    {0x1F15, 1, {0x03B5}},
    {0x1F18, 1, {0x03B5}},
    {0x1F19, 1, {0x03B5}},
    {0x1F1A, 1, {0x03B5}},
    {0x1F1B, 1, {0x03B5}},
    {0x1F1C, 1, {0x03B5}},
    {0x1F1D, 1, {0x03B5}},
    {0x1F20, 1, {0x03B7}},
    {0x1F21, 1, {0x03B7}},
    {0x1F22, 1, {0x03B7}},
    {0x1F23, 1, {0x03B7}},
    {0x1F24, 1, {0x03B7}},
    {0x1F25, 1, {0x03B7}},
    {0x1F26, 1, {0x03B7}},
    {0x1F27, 1, {0x03B7}},
    {0x1F28, 1, {0x03B7}},
    {0x1F29, 1, {0x03B7}},
    {0x1F2A, 1, {0x03B7}},
    {0x1F2B, 1, {0x03B7}},
    {0x1F2C, 1, {0x03B7}},
    {0x1F2D, 1, {0x03B7}},
    {0x1F2E, 1, {0x03B7}},
    {0x1F2F, 1, {0x03B7}},
    {0x1F30, 1, {0x03B9}},
    {0x1F31, 1, {0x03B9}},
    {0x1F32, 1, {0x03B9}},
    {0x1F33, 1, {0x03B9}},
    {0x1F34, 1, {0x03B9}},
    {0x1F35, 1, {0x03B9}},
    {0x1F36, 1, {0x03B9}},
    {0x1F37, 1, {0x03B9}},
    {0x1F38, 1, {0x03B9}},
    {0x1F39, 1, {0x03B9}},
    {0x1F3A, 1, {0x03B9}},
    {0x1F3B, 1, {0x03B9}},
    {0x1F3C, 1, {0x03B9}},
    {0x1F3D, 1, {0x03B9}},
    {0x1F3E, 1, {0x03B9}},
    {0x1F3F, 1, {0x03B9}},
    {0x1F40, 1, {0x03BF}},
    {0x1F41, 1, {0x03BF}},
    {0x1F42, 1, {0x03BF}},
    {0x1F43, 1, {0x03BF}},
    {0x1F44, 1, {0x03BF}},
    {0x1F45, 1, {0x03BF}},
    {0x1F48, 1, {0x03BF}},
    {0x1F49, 1, {0x03BF}},
    {0x1F4A, 1, {0x03BF}},
    {0x1F4B, 1, {0x03BF}},
    {0x1F4C, 1, {0x03BF}},
    {0x1F4D, 1, {0x03BF}},
    {0x1F50, 1, {0x03C5}},
    {0x1F51, 1, {0x03C5}},
    {0x1F52, 1, {0x03C5}},
    {0x1F53, 1, {0x03C5}},
    {0x1F54, 1, {0x03C5}},
    {0x1F55, 1, {0x03C5}},
    {0x1F56, 1, {0x03C5}},
    {0x1F57, 1, {0x03C5}},
    {0x1F59, 1, {0x03C5}},
    {0x1F5B, 1, {0x03C5}},
    {0x1F5D, 1, {0x03C5}},
    {0x1F5F, 1, {0x03C5}},
    {0x1F60, 1, {0x03C9}},
    {0x1F61, 1, {0x03C9}},
    {0x1F62, 1, {0x03C9}},
    {0x1F63, 1, {0x03C9}},
    {0x1F64, 1, {0x03C9}},
    {0x1F65, 1, {0x03C9}},
    {0x1F66, 1, {0x03C9}},
    {0x1F67, 1, {0x03C9}},
    {0x1F68, 1, {0x03C9}},
    {0x1F69, 1, {0x03C9}},
    {0x1F6A, 1, {0x03C9}},
    {0x1F6B, 1, {0x03C9}},
    {0x1F6C, 1, {0x03C9}},
    {0x1F6D, 1, {0x03C9}},
    {0x1F6E, 1, {0x03C9}},
    {0x1F6F, 1, {0x03C9}},
    {0x1F70, 1, {0x03B1}},
    {0x1F71, 1, {0x03B1}},
    {0x1F72, 1, {0x03B5}},
    {0x1F73, 1, {0x03B5}},
    {0x1F74, 1, {0x03B7}},
    {0x1F75, 1, {0x03B7}},
    {0x1F76, 1, {0x03B9}},
    {0x1F77, 1, {0x03B9}},
    {0x1F78, 1, {0x03BF}},
    {0x1F79, 1, {0x03BF}},
    {0x1F7A, 1, {0x03C5}},
    {0x1F7B, 1, {0x03C5}},
    {0x1F7C, 1, {0x03C9}},
    {0x1F7D, 1, {0x03C9}},
    {0x1F80, 2, {0x03B1, 0x03B9}},
    {0x1F81, 2, {0x03B1, 0x03B9}},
    {0x1F82, 2, {0x03B1, 0x03B9}},
    {0x1F83, 2, {0x03B1, 0x03B9}},
    {0x1F84, 2, {0x03B1, 0x03B9}},
    {0x1F85, 2, {0x03B1, 0x03B9}},
    {0x1F86, 2, {0x03B1, 0x03B9}},
    {0x1F87, 2, {0x03B1, 0x03B9}},
    {0x1F88, 2, {0x03B1, 0x03B9}},
    {0x1F89, 2, {0x03B1, 0x03B9}},
    {0x1F8A, 2, {0x03B1, 0x03B9}},
    {0x1F8B, 2, {0x03B1, 0x03B9}},
    {0x1F8C, 2, {0x03B1, 0x03B9}},
    {0x1F8D, 2, {0x03B1, 0x03B9}},
    {0x1F8E, 2, {0x03B1, 0x03B9}},
    {0x1F8F, 2, {0x03B1, 0x03B9}},
    {0x1F90, 2, {0x03B7, 0x03B9}},
    {0x1F91, 2, {0x03B7, 0x03B9}},
    {0x1F92, 2, {0x03B7, 0x03B9}},
    {0x1F93, 2, {0x03B7, 0x03B9}},
    {0x1F94, 2, {0x03B7, 0x03B9}},
    {0x1F95, 2, {0x03B7, 0x03B9}},
    {0x1F96, 2, {0x03B7, 0x03B9}},
    {0x1F97, 2, {0x03B7, 0x03B9}},
    {0x1F98, 2, {0x03B7, 0x03B9}},
    {0x1F99, 2, {0x03B7, 0x03B9}},
    {0x1F9A, 2, {0x03B7, 0x03B9}},
    {0x1F9B, 2, {0x03B7, 0x03B9}},
    {0x1F9C, 2, {0x03B7, 0x03B9}},
    {0x1F9D, 2, {0x03B7, 0x03B9}},
    {0x1F9E, 2, {0x03B7, 0x03B9}},
    {0x1F9F, 2, {0x03B7, 0x03B9}},
    {0x1FA0, 2, {0x03C9, 0x03B9}},
    {0x1FA1, 2, {0x03C9, 0x03B9}},
    {0x1FA2, 2, {0x03C9, 0x03B9}},
    {0x1FA3, 2, {0x03C9, 0x03B9}},
    {0x1FA4, 2, {0x03C9, 0x03B9}},
    {0x1FA5, 2, {0x03C9, 0x03B9}},
    {0x1FA6, 2, {0x03C9, 0x03B9}},
    {0x1FA7, 2, {0x03C9, 0x03B9}},
    {0x1FA8, 2, {0x03C9, 0x03B9}},
    {0x1FA9, 2, {0x03C9, 0x03B9}},
    {0x1FAA, 2, {0x03C9, 0x03B9}},
    {0x1FAB, 2, {0x03C9, 0x03B9}},
    {0x1FAC, 2, {0x03C9, 0x03B9}},
    {0x1FAD, 2, {0x03C9, 0x03B9}},
    {0x1FAE, 2, {0x03C9, 0x03B9}},
    {0x1FAF, 2, {0x03C9, 0x03B9}},
    {0x1FB0, 1, {0x03B1}},
    {0x1FB1, 1, {0x03B1}},
    {0x1FB2, 2, {0x03B1, 0x03B9}},
    {0x1FB3, 2, {0x03B1, 0x03B9}},
    {0x1FB4, 2, {0x03B1, 0x03B9}},
    {0x1FB6, 1, {0x03B1}},
    {0x1FB7, 2, {0x03B1, 0x03B9}},
    {0x1FB8, 1, {0x03B1}},
    {0x1FB9, 1, {0x03B1}},
    {0x1FBA, 1, {0x03B1}},
    {0x1FBB, 1, {0x03B1}},
    {0x1FBC, 2, {0x03B1, 0x03B9}},
    {0x1FBE, 1, {0x03B9}},
    {0x1FC2, 2, {0x03B7, 0x03B9}},
    {0x1FC3, 2, {0x03B7, 0x03B9}},
    {0x1FC4, 2, {0x03B7, 0x03B9}},
    {0x1FC6, 1, {0x03B7}},
    {0x1FC7, 2, {0x03B7, 0x03B9}},
    {0x1FC8, 1, {0x03B5}},
    {0x1FC9, 1, {0x03B5}},
    {0x1FCA, 1, {0x03B7}},
    {0x1FCB, 1, {0x03B7}},
    {0x1FCC, 2, {0x03B7, 0x03B9}},
    {0x1FD0, 1, {0x03B9}},
    {0x1FD1, 1, {0x03B9}},
    {0x1FD2, 1, {0x03B9}},
    {0x1FD3, 1, {0x03B9}},
    {0x1FD6, 1, {0x03B9}},
    {0x1FD7, 1, {0x03B9}},
    {0x1FD8, 1, {0x03B9}},
    {0x1FD9, 1, {0x03B9}},
    {0x1FDA, 1, {0x03B9}},
    {0x1FDB, 1, {0x03B9}},
    {0x1FE0, 1, {0x03C5}},
    {0x1FE1, 1, {0x03C5}},
    {0x1FE2, 1, {0x03C5}},
    {0x1FE3, 1, {0x03C5}},
    {0x1FE4, 1, {0x03C1}},
    {0x1FE5, 1, {0x03C1}},
    {0x1FE6, 1, {0x03C5}},
    {0x1FE7, 1, {0x03C5}},
    {0x1FE8, 1, {0x03C5}},
    {0x1FE9, 1, {0x03C5}},
    {0x1FEA, 1, {0x03C5}},
    {0x1FEB, 1, {0x03C5}},
    {0x1FEC, 1, {0x03C1}},
    {0x1FF2, 2, {0x03C9, 0x03B9}},
    {0x1FF3, 2, {0x03C9, 0x03B9}},
    {0x1FF4, 2, {0x03C9, 0x03B9}},
    {0x1FF6, 1, {0x03C9}},
    {0x1FF7, 2, {0x03C9, 0x03B9}},
    {0x1FF8, 1, {0x03BF}},
    {0x1FF9, 1, {0x03BF}},
    {0x1FFA, 1, {0x03C9}},
    {0x1FFB, 1, {0x03C9}},
    {0x1FFC, 2, {0x03C9, 0x03B9}},
    {0x2126, 1, {0x03C9}},
    {0x212A, 1, {0x006B}},
    {0x212B, 1, {0x0061}},
    {0x2132, 1, {0x214E}},
    {0x2183, 1, {0x2184}},
    {0x2C00, 1, {0x2C30}},
    {0x2C01, 1, {0x2C31}},
    {0x2C02, 1, {0x2C32}},
    {0x2C03, 1, {0x2C33}},
    {0x2C04, 1, {0x2C34}},
    {0x2C05, 1, {0x2C35}},
    {0x2C06, 1, {0x2C36}},
    {0x2C07, 1, {0x2C37}},
    {0x2C08, 1, {0x2C38}},
    {0x2C09, 1, {0x2C39}},
    {0x2C0A, 1, {0x2C3A}},
    {0x2C0B, 1, {0x2C3B}},
    {0x2C0C, 1, {0x2C3C}},
    {0x2C0D, 1, {0x2C3D}},
    {0x2C0E, 1, {0x2C3E}},
    {0x2C0F, 1, {0x2C3F}},
    {0x2C10, 1, {0x2C40}},
    {0x2C11, 1, {0x2C41}},
    {0x2C12, 1, {0x2C42}},
    {0x2C13, 1, {0x2C43}},
    {0x2C14, 1, {0x2C44}},
    {0x2C15, 1, {0x2C45}},
    {0x2C16, 1, {0x2C46}},
    {0x2C17, 1, {0x2C47}},
    {0x2C18, 1, {0x2C48}},
    {0x2C19, 1, {0x2C49}},
    {0x2C1A, 1, {0x2C4A}},
    {0x2C1B, 1, {0x2C4B}},
    {0x2C1C, 1, {0x2C4C}},
    {0x2C1D, 1, {0x2C4D}},
    {0x2C1E, 1, {0x2C4E}},
    {0x2C1F, 1, {0x2C4F}},
    {0x2C20, 1, {0x2C50}},
    {0x2C21, 1, {0x2C51}},
    {0x2C22, 1, {0x2C52}},
    {0x2C23, 1, {0x2C53}},
    {0x2C24, 1, {0x2C54}},
    {0x2C25, 1, {0x2C55}},
    {0x2C26, 1, {0x2C56}},
    {0x2C27, 1, {0x2C57}},
    {0x2C28, 1, {0x2C58}},
    {0x2C29, 1, {0x2C59}},
    {0x2C2A, 1, {0x2C5A}},
    {0x2C2B, 1, {0x2C5B}},
    {0x2C2C, 1, {0x2C5C}},
    {0x2C2D, 1, {0x2C5D}},
    {0x2C2E, 1, {0x2C5E}},
    {0x2C60, 1, {0x2C61}},
    {0x2C62, 1, {0x026B}},
    {0x2C63, 1, {0x1D7D}},
    {0x2C64, 1, {0x027D}},
    {0x2C67, 1, {0x2C68}},
    {0x2C69, 1, {0x2C6A}},
    {0x2C6B, 1, {0x2C6C}},
    {0x2C6D, 1, {0x0251}},
    {0x2C6E, 1, {0x0271}},
    {0x2C6F, 1, {0x0250}},
    {0x2C70, 1, {0x0252}},
    {0x2C72, 1, {0x2C73}},
    {0x2C75, 1, {0x2C76}},
    {0x2C7E, 1, {0x023F}},
    {0x2C7F, 1, {0x0240}},
    {0x2C80, 1, {0x2C81}},
    {0x2C82, 1, {0x2C83}},
    {0x2C84, 1, {0x2C85}},
    {0x2C86, 1, {0x2C87}},
    {0x2C88, 1, {0x2C89}},
    {0x2C8A, 1, {0x2C8B}},
    {0x2C8C, 1, {0x2C8D}},
    {0x2C8E, 1, {0x2C8F}},
    {0x2C90, 1, {0x2C91}},
    {0x2C92, 1, {0x2C93}},
    {0x2C94, 1, {0x2C95}},
    {0x2C96, 1, {0x2C97}},
    {0x2C98, 1, {0x2C99}},
    {0x2C9A, 1, {0x2C9B}},
    {0x2C9C, 1, {0x2C9D}},
    {0x2C9E, 1, {0x2C9F}},
    {0x2CA0, 1, {0x2CA1}},
    {0x2CA2, 1, {0x2CA3}},
    {0x2CA4, 1, {0x2CA5}},
    {0x2CA6, 1, {0x2CA7}},
    {0x2CA8, 1, {0x2CA9}},
    {0x2CAA, 1, {0x2CAB}},
    {0x2CAC, 1, {0x2CAD}},
    {0x2CAE, 1, {0x2CAF}},
    {0x2CB0, 1, {0x2CB1}},
    {0x2CB2, 1, {0x2CB3}},
    {0x2CB4, 1, {0x2CB5}},
    {0x2CB6, 1, {0x2CB7}},
    {0x2CB8, 1, {0x2CB9}},
    {0x2CBA, 1, {0x2CBB}},
    {0x2CBC, 1, {0x2CBD}},
    {0x2CBE, 1, {0x2CBF}},
    {0x2CC0, 1, {0x2CC1}},
    {0x2CC2, 1, {0x2CC3}},
    {0x2CC4, 1, {0x2CC5}},
    {0x2CC6, 1, {0x2CC7}},
    {0x2CC8, 1, {0x2CC9}},
    {0x2CCA, 1, {0x2CCB}},
    {0x2CCC, 1, {0x2CCD}},
    {0x2CCE, 1, {0x2CCF}},
    {0x2CD0, 1, {0x2CD1}},
    {0x2CD2, 1, {0x2CD3}},
    {0x2CD4, 1, {0x2CD5}},
    {0x2CD6, 1, {0x2CD7}},
    {0x2CD8, 1, {0x2CD9}},
    {0x2CDA, 1, {0x2CDB}},
    {0x2CDC, 1, {0x2CDD}},
    {0x2CDE, 1, {0x2CDF}},
    {0x2CE0, 1, {0x2CE1}},
    {0x2CE2, 1, {0x2CE3}},
    {0x2CEB, 1, {0x2CEC}},
    {0x2CED, 1, {0x2CEE}},
    {0x2CF2, 1, {0x2CF3}},
    {0x304C, 1, {0x304B}},
    {0x304E, 1, {0x304D}},
    {0x3050, 1, {0x304F}},
    {0x3052, 1, {0x3051}},
    {0x3054, 1, {0x3053}},
    {0x3056, 1, {0x3055}},
    {0x3058, 1, {0x3057}},
    {0x305A, 1, {0x3059}},
    {0x305C, 1, {0x305B}},
    {0x305E, 1, {0x305D}},
    {0x3060, 1, {0x305F}},
    {0x3062, 1, {0x3061}},
    {0x3065, 1, {0x3064}},
    {0x3067, 1, {0x3066}},
    {0x3069, 1, {0x3068}},
    {0x3070, 1, {0x306F}},
    {0x3071, 1, {0x306F}},
    {0x3073, 1, {0x3072}},
    {0x3074, 1, {0x3072}},
    {0x3076, 1, {0x3075}},
    {0x3077, 1, {0x3075}},
    {0x3079, 1, {0x3078}},
    {0x307A, 1, {0x3078}},
    {0x307C, 1, {0x307B}},
    {0x307D, 1, {0x307B}},
    {0x3094, 1, {0x3046}},
    {0x309E, 1, {0x309D}},
    {0x30AC, 1, {0x30AB}},
    {0x30AE, 1, {0x30AD}},
    {0x30B0, 1, {0x30AF}},
    {0x30B2, 1, {0x30B1}},
    {0x30B4, 1, {0x30B3}},
    {0x30B6, 1, {0x30B5}},
    {0x30B8, 1, {0x30B7}},
    {0x30BA, 1, {0x30B9}},
    {0x30BC, 1, {0x30BB}},
    {0x30BE, 1, {0x30BD}},
    {0x30C0, 1, {0x30BF}},
    {0x30C2, 1, {0x30C1}},
    {0x30C5, 1, {0x30C4}},
    {0x30C7, 1, {0x30C6}},
    {0x30C9, 1, {0x30C8}},
    {0x30D0, 1, {0x30CF}},
    {0x30D1, 1, {0x30CF}},
    {0x30D3, 1, {0x30D2}},
    {0x30D4, 1, {0x30D2}},
    {0x30D6, 1, {0x30D5}},
    {0x30D7, 1, {0x30D5}},
    {0x30D9, 1, {0x30D8}},
    {0x30DA, 1, {0x30D8}},
    {0x30DC, 1, {0x30DB}},
    {0x30DD, 1, {0x30DB}},
    {0x30F4, 1, {0x30A6}},
    {0x30F7, 1, {0x30EF}},
    {0x30F8, 1, {0x30F0}},
    {0x30F9, 1, {0x30F1}},
    {0x30FA, 1, {0x30F2}},
    {0x30FE, 1, {0x30FD}},
    {0xA640, 1, {0xA641}},
    {0xA642, 1, {0xA643}},
    {0xA644, 1, {0xA645}},
    {0xA646, 1, {0xA647}},
    {0xA648, 1, {0xA649}},
    {0xA64A, 1, {0xA64B}},
    {0xA64C, 1, {0xA64D}},
    {0xA64E, 1, {0xA64F}},
    {0xA650, 1, {0xA651}},
    {0xA652, 1, {0xA653}},
    {0xA654, 1, {0xA655}},
    {0xA656, 1, {0xA657}},
    {0xA658, 1, {0xA659}},
    {0xA65A, 1, {0xA65B}},
    {0xA65C, 1, {0xA65D}},
    {0xA65E, 1, {0xA65F}},
    {0xA660, 1, {0xA661}},
    {0xA662, 1, {0xA663}},
    {0xA664, 1, {0xA665}},
    {0xA666, 1, {0xA667}},
    {0xA668, 1, {0xA669}},
    {0xA66A, 1, {0xA66B}},
    {0xA66C, 1, {0xA66D}},
    {0xA680, 1, {0xA681}},
    {0xA682, 1, {0xA683}},
    {0xA684, 1, {0xA685}},
    {0xA686, 1, {0xA687}},
    {0xA688, 1, {0xA689}},
    {0xA68A, 1, {0xA68B}},
    {0xA68C, 1, {0xA68D}},
    {0xA68E, 1, {0xA68F}},
    {0xA690, 1, {0xA691}},
    {0xA692, 1, {0xA693}},
    {0xA694, 1, {0xA695}},
    {0xA696, 1, {0xA697}},
    {0xA698, 1, {0xA699}},
    {0xA69A, 1, {0xA69B}},
    {0xA722, 1, {0xA723}},
    {0xA724, 1, {0xA725}},
    {0xA726, 1, {0xA727}},
    {0xA728, 1, {0xA729}},
    {0xA72A, 1, {0xA72B}},
    {0xA72C, 1, {0xA72D}},
    {0xA72E, 1, {0xA72F}},
    {0xA732, 1, {0xA733}},
    {0xA734, 1, {0xA735}},
    {0xA736, 1, {0xA737}},
    {0xA738, 1, {0xA739}},
    {0xA73A, 1, {0xA73B}},
    {0xA73C, 1, {0xA73D}},
    {0xA73E, 1, {0xA73F}},
    {0xA740, 1, {0xA741}},
    {0xA742, 1, {0xA743}},
    {0xA744, 1, {0xA745}},
    {0xA746, 1, {0xA747}},
    {0xA748, 1, {0xA749}},
    {0xA74A, 1, {0xA74B}},
    {0xA74C, 1, {0xA74D}},
    {0xA74E, 1, {0xA74F}},
    {0xA750, 1, {0xA751}},
    {0xA752, 1, {0xA753}},
    {0xA754, 1, {0xA755}},
    {0xA756, 1, {0xA757}},
    {0xA758, 1, {0xA759}},
    {0xA75A, 1, {0xA75B}},
    {0xA75C, 1, {0xA75D}},
    {0xA75E, 1, {0xA75F}},
    {0xA760, 1, {0xA761}},
    {0xA762, 1, {0xA763}},
    {0xA764, 1, {0xA765}},
    {0xA766, 1, {0xA767}},
    {0xA768, 1, {0xA769}},
    {0xA76A, 1, {0xA76B}},
    {0xA76C, 1, {0xA76D}},
    {0xA76E, 1, {0xA76F}},
    {0xA779, 1, {0xA77A}},
    {0xA77B, 1, {0xA77C}},
    {0xA77D, 1, {0x1D79}},
    {0xA77E, 1, {0xA77F}},
    {0xA780, 1, {0xA781}},
    {0xA782, 1, {0xA783}},
    {0xA784, 1, {0xA785}},
    {0xA786, 1, {0xA787}},
    {0xA78B, 1, {0xA78C}},
    {0xA78D, 1, {0x0265}},
    {0xA790, 1, {0xA791}},
    {0xA792, 1, {0xA793}},
    {0xA796, 1, {0xA797}},
    {0xA798, 1, {0xA799}},
    {0xA79A, 1, {0xA79B}},
    {0xA79C, 1, {0xA79D}},
    {0xA79E, 1, {0xA79F}},
    {0xA7A0, 1, {0xA7A1}},
    {0xA7A2, 1, {0xA7A3}},
    {0xA7A4, 1, {0xA7A5}},
    {0xA7A6, 1, {0xA7A7}},
    {0xA7A8, 1, {0xA7A9}},
    {0xA7AA, 1, {0x0266}},
    {0xA7AB, 1, {0x025C}},
    {0xA7AC, 1, {0x0261}},
    {0xA7AD, 1, {0x026C}},
    {0xA7AE, 1, {0x026A}},
    {0xA7B0, 1, {0x029E}},
    {0xA7B1, 1, {0x0287}},
    {0xA7B2, 1, {0x029D}},
    {0xA7B3, 1, {0xAB53}},
    {0xA7B4, 1, {0xA7B5}},
    {0xA7B6, 1, {0xA7B7}},
    {0xA7B8, 1, {0xA7B9}},
    {0xA7BA, 1, {0xA7BB}},
    {0xA7BC, 1, {0xA7BD}},
    {0xA7BE, 1, {0xA7BF}},
    {0xA7C2, 1, {0xA7C3}},
    {0xA7C4, 1, {0xA794}},
    {0xA7C5, 1, {0x0282}},
    {0xA7C6, 1, {0x1D8E}},
    {0xA7C7, 1, {0xA7C8}},
    {0xA7C9, 1, {0xA7CA}},
    {0xA7F5, 1, {0xA7F6}},
    {0xAB70, 1, {0x13A0}},
    {0xAB71, 1, {0x13A1}},
    {0xAB72, 1, {0x13A2}},
    {0xAB73, 1, {0x13A3}},
    {0xAB74, 1, {0x13A4}},
    {0xAB75, 1, {0x13A5}},
    {0xAB76, 1, {0x13A6}},
    {0xAB77, 1, {0x13A7}},
    {0xAB78, 1, {0x13A8}},
    {0xAB79, 1, {0x13A9}},
    {0xAB7A, 1, {0x13AA}},
    {0xAB7B, 1, {0x13AB}},
    {0xAB7C, 1, {0x13AC}},
    {0xAB7D, 1, {0x13AD}},
    {0xAB7E, 1, {0x13AE}},
    {0xAB7F, 1, {0x13AF}},
    {0xAB80, 1, {0x13B0}},
    {0xAB81, 1, {0x13B1}},
    {0xAB82, 1, {0x13B2}},
    {0xAB83, 1, {0x13B3}},
    {0xAB84, 1, {0x13B4}},
    {0xAB85, 1, {0x13B5}},
    {0xAB86, 1, {0x13B6}},
    {0xAB87, 1, {0x13B7}},
    {0xAB88, 1, {0x13B8}},
    {0xAB89, 1, {0x13B9}},
    {0xAB8A, 1, {0x13BA}},
    {0xAB8B, 1, {0x13BB}},
    {0xAB8C, 1, {0x13BC}},
    {0xAB8D, 1, {0x13BD}},
    {0xAB8E, 1, {0x13BE}},
    {0xAB8F, 1, {0x13BF}},
    {0xAB90, 1, {0x13C0}},
    {0xAB91, 1, {0x13C1}},
    {0xAB92, 1, {0x13C2}},
    {0xAB93, 1, {0x13C3}},
    {0xAB94, 1, {0x13C4}},
    {0xAB95, 1, {0x13C5}},
    {0xAB96, 1, {0x13C6}},
    {0xAB97, 1, {0x13C7}},
    {0xAB98, 1, {0x13C8}},
    {0xAB99, 1, {0x13C9}},
    {0xAB9A, 1, {0x13CA}},
    {0xAB9B, 1, {0x13CB}},
    {0xAB9C, 1, {0x13CC}},
    {0xAB9D, 1, {0x13CD}},
    {0xAB9E, 1, {0x13CE}},
    {0xAB9F, 1, {0x13CF}},
    {0xABA0, 1, {0x13D0}},
    {0xABA1, 1, {0x13D1}},
    {0xABA2, 1, {0x13D2}},
    {0xABA3, 1, {0x13D3}},
    {0xABA4, 1, {0x13D4}},
    {0xABA5, 1, {0x13D5}},
    {0xABA6, 1, {0x13D6}},
    {0xABA7, 1, {0x13D7}},
    {0xABA8, 1, {0x13D8}},
    {0xABA9, 1, {0x13D9}},
    {0xABAA, 1, {0x13DA}},
    {0xABAB, 1, {0x13DB}},
    {0xABAC, 1, {0x13DC}},
    {0xABAD, 1, {0x13DD}},
    {0xABAE, 1, {0x13DE}},
    {0xABAF, 1, {0x13DF}},
    {0xABB0, 1, {0x13E0}},
    {0xABB1, 1, {0x13E1}},
    {0xABB2, 1, {0x13E2}},
    {0xABB3, 1, {0x13E3}},
    {0xABB4, 1, {0x13E4}},
    {0xABB5, 1, {0x13E5}},
    {0xABB6, 1, {0x13E6}},
    {0xABB7, 1, {0x13E7}},
    {0xABB8, 1, {0x13E8}},
    {0xABB9, 1, {0x13E9}},
    {0xABBA, 1, {0x13EA}},
    {0xABBB, 1, {0x13EB}},
    {0xABBC, 1, {0x13EC}},
    {0xABBD, 1, {0x13ED}},
    {0xABBE, 1, {0x13EE}},
    {0xABBF, 1, {0x13EF}},
    {0xF900, 1, {0x8C48}},
    {0xF901, 1, {0x66F4}},
    {0xF902, 1, {0x8ECA}},
    {0xF903, 1, {0x8CC8}},
    {0xF904, 1, {0x6ED1}},
    {0xF905, 1, {0x4E32}},
    {0xF906, 1, {0x53E5}},
    {0xF907, 1, {0x9F9C}},
    {0xF908, 1, {0x9F9C}},
    {0xF909, 1, {0x5951}},
    {0xF90A, 1, {0x91D1}},
    {0xF90B, 1, {0x5587}},
    {0xF90C, 1, {0x5948}},
    {0xF90D, 1, {0x61F6}},
    {0xF90E, 1, {0x7669}},
    {0xF90F, 1, {0x7F85}},
    {0xF910, 1, {0x863F}},
    {0xF911, 1, {0x87BA}},
    {0xF912, 1, {0x88F8}},
    {0xF913, 1, {0x908F}},
    {0xF914, 1, {0x6A02}},
    {0xF915, 1, {0x6D1B}},
    {0xF916, 1, {0x70D9}},
    {0xF917, 1, {0x73DE}},
    {0xF918, 1, {0x843D}},
    {0xF919, 1, {0x916A}},
    {0xF91A, 1, {0x99F1}},
    {0xF91B, 1, {0x4E82}},
    {0xF91C, 1, {0x5375}},
    {0xF91D, 1, {0x6B04}},
    {0xF91E, 1, {0x721B}},
    {0xF91F, 1, {0x862D}},
    {0xF920, 1, {0x9E1E}},
    {0xF921, 1, {0x5D50}},
    {0xF922, 1, {0x6FEB}},
    {0xF923, 1, {0x85CD}},
    {0xF924, 1, {0x8964}},
    {0xF925, 1, {0x62C9}},
    {0xF926, 1, {0x81D8}},
    {0xF927, 1, {0x881F}},
    {0xF928, 1, {0x5ECA}},
    {0xF929, 1, {0x6717}},
    {0xF92A, 1, {0x6D6A}},
    {0xF92B, 1, {0x72FC}},
    {0xF92C, 1, {0x90CE}},
    {0xF92D, 1, {0x4F86}},
    {0xF92E, 1, {0x51B7}},
    {0xF92F, 1, {0x52DE}},
    {0xF930, 1, {0x64C4}},
    {0xF931, 1, {0x6AD3}},
    {0xF932, 1, {0x7210}},
    {0xF933, 1, {0x76E7}},
    {0xF934, 1, {0x8001}},
    {0xF935, 1, {0x8606}},
    {0xF936, 1, {0x865C}},
    {0xF937, 1, {0x8DEF}},
    {0xF938, 1, {0x9732}},
    {0xF939, 1, {0x9B6F}},
    {0xF93A, 1, {0x9DFA}},
    {0xF93B, 1, {0x788C}},
    {0xF93C, 1, {0x797F}},
    {0xF93D, 1, {0x7DA0}},
    {0xF93E, 1, {0x83C9}},
    {0xF93F, 1, {0x9304}},
    {0xF940, 1, {0x9E7F}},
    {0xF941, 1, {0x8AD6}},
    {0xF942, 1, {0x58DF}},
    {0xF943, 1, {0x5F04}},
    {0xF944, 1, {0x7C60}},
    {0xF945, 1, {0x807E}},
    {0xF946, 1, {0x7262}},
    {0xF947, 1, {0x78CA}},
    {0xF948, 1, {0x8CC2}},
    {0xF949, 1, {0x96F7}},
    {0xF94A, 1, {0x58D8}},
    {0xF94B, 1, {0x5C62}},
    {0xF94C, 1, {0x6A13}},
    {0xF94D, 1, {0x6DDA}},
    {0xF94E, 1, {0x6F0F}},
    {0xF94F, 1, {0x7D2F}},
    {0xF950, 1, {0x7E37}},
    {0xF951, 1, {0x964B}},
    {0xF952, 1, {0x52D2}},
    {0xF953, 1, {0x808B}},
    {0xF954, 1, {0x51DC}},
    {0xF955, 1, {0x51CC}},
    {0xF956, 1, {0x7A1C}},
    {0xF957, 1, {0x7DBE}},
    {0xF958, 1, {0x83F1}},
    {0xF959, 1, {0x9675}},
    {0xF95A, 1, {0x8B80}},
    {0xF95B, 1, {0x62CF}},
    {0xF95C, 1, {0x6A02}},
    {0xF95D, 1, {0x8AFE}},
    {0xF95E, 1, {0x4E39}},
    {0xF95F, 1, {0x5BE7}},
    {0xF960, 1, {0x6012}},
    {0xF961, 1, {0x7387}},
    {0xF962, 1, {0x7570}},
    {0xF963, 1, {0x5317}},
    {0xF964, 1, {0x78FB}},
    {0xF965, 1, {0x4FBF}},
    {0xF966, 1, {0x5FA9}},
    {0xF967, 1, {0x4E0D}},
    {0xF968, 1, {0x6CCC}},
    {0xF969, 1, {0x6578}},
    {0xF96A, 1, {0x7D22}},
    {0xF96B, 1, {0x53C3}},
    {0xF96C, 1, {0x585E}},
    {0xF96D, 1, {0x7701}},
    {0xF96E, 1, {0x8449}},
    {0xF96F, 1, {0x8AAA}},
    {0xF970, 1, {0x6BBA}},
    {0xF971, 1, {0x8FB0}},
    {0xF972, 1, {0x6C88}},
    {0xF973, 1, {0x62FE}},
    {0xF974, 1, {0x82E5}},
    {0xF975, 1, {0x63A0}},
    {0xF976, 1, {0x7565}},
    {0xF977, 1, {0x4EAE}},
    {0xF978, 1, {0x5169}},
    {0xF979, 1, {0x51C9}},
    {0xF97A, 1, {0x6881}},
    {0xF97B, 1, {0x7CE7}},
    {0xF97C, 1, {0x826F}},
    {0xF97D, 1, {0x8AD2}},
    {0xF97E, 1, {0x91CF}},
    {0xF97F, 1, {0x52F5}},
    {0xF980, 1, {0x5442}},
    {0xF981, 1, {0x5973}},
    {0xF982, 1, {0x5EEC}},
    {0xF983, 1, {0x65C5}},
    {0xF984, 1, {0x6FFE}},
    {0xF985, 1, {0x792A}},
    {0xF986, 1, {0x95AD}},
    {0xF987, 1, {0x9A6A}},
    {0xF988, 1, {0x9E97}},
    {0xF989, 1, {0x9ECE}},
    {0xF98A, 1, {0x529B}},
    {0xF98B, 1, {0x66C6}},
    {0xF98C, 1, {0x6B77}},
    {0xF98D, 1, {0x8F62}},
    {0xF98E, 1, {0x5E74}},
    {0xF98F, 1, {0x6190}},
    {0xF990, 1, {0x6200}},
    {0xF991, 1, {0x649A}},
    {0xF992, 1, {0x6F23}},
    {0xF993, 1, {0x7149}},
    {0xF994, 1, {0x7489}},
    {0xF995, 1, {0x79CA}},
    {0xF996, 1, {0x7DF4}},
    {0xF997, 1, {0x806F}},
    {0xF998, 1, {0x8F26}},
    {0xF999, 1, {0x84EE}},
    {0xF99A, 1, {0x9023}},
    {0xF99B, 1, {0x934A}},
    {0xF99C, 1, {0x5217}},
    {0xF99D, 1, {0x52A3}},
    {0xF99E, 1, {0x54BD}},
    {0xF99F, 1, {0x70C8}},
    {0xF9A0, 1, {0x88C2}},
    {0xF9A1, 1, {0x8AAA}},
    {0xF9A2, 1, {0x5EC9}},
    {0xF9A3, 1, {0x5FF5}},
    {0xF9A4, 1, {0x637B}},
    {0xF9A5, 1, {0x6BAE}},
    {0xF9A6, 1, {0x7C3E}},
    {0xF9A7, 1, {0x7375}},
    {0xF9A8, 1, {0x4EE4}},
    {0xF9A9, 1, {0x56F9}},
    {0xF9AA, 1, {0x5BE7}},
    {0xF9AB, 1, {0x5DBA}},
    {0xF9AC, 1, {0x601C}},
    {0xF9AD, 1, {0x73B2}},
    {0xF9AE, 1, {0x7469}},
    {0xF9AF, 1, {0x7F9A}},
    {0xF9B0, 1, {0x8046}},
    {0xF9B1, 1, {0x9234}},
    {0xF9B2, 1, {0x96F6}},
    {0xF9B3, 1, {0x9748}},
    {0xF9B4, 1, {0x9818}},
    {0xF9B5, 1, {0x4F8B}},
    {0xF9B6, 1, {0x79AE}},
    {0xF9B7, 1, {0x91B4}},
    {0xF9B8, 1, {0x96B8}},
    {0xF9B9, 1, {0x60E1}},
    {0xF9BA, 1, {0x4E86}},
    {0xF9BB, 1, {0x50DA}},
    {0xF9BC, 1, {0x5BEE}},
    {0xF9BD, 1, {0x5C3F}},
    {0xF9BE, 1, {0x6599}},
    {0xF9BF, 1, {0x6A02}},
    {0xF9C0, 1, {0x71CE}},
    {0xF9C1, 1, {0x7642}},
    {0xF9C2, 1, {0x84FC}},
    {0xF9C3, 1, {0x907C}},
    {0xF9C4, 1, {0x9F8D}},
    {0xF9C5, 1, {0x6688}},
    {0xF9C6, 1, {0x962E}},
    {0xF9C7, 1, {0x5289}},
    {0xF9C8, 1, {0x677B}},
    {0xF9C9, 1, {0x67F3}},
    {0xF9CA, 1, {0x6D41}},
    {0xF9CB, 1, {0x6E9C}},
    {0xF9CC, 1, {0x7409}},
    {0xF9CD, 1, {0x7559}},
    {0xF9CE, 1, {0x786B}},
    {0xF9CF, 1, {0x7D10}},
    {0xF9D0, 1, {0x985E}},
    {0xF9D1, 1, {0x516D}},
    {0xF9D2, 1, {0x622E}},
    {0xF9D3, 1, {0x9678}},
    {0xF9D4, 1, {0x502B}},
    {0xF9D5, 1, {0x5D19}},
    {0xF9D6, 1, {0x6DEA}},
    {0xF9D7, 1, {0x8F2A}},
    {0xF9D8, 1, {0x5F8B}},
    {0xF9D9, 1, {0x6144}},
    {0xF9DA, 1, {0x6817}},
    {0xF9DB, 1, {0x7387}},
    {0xF9DC, 1, {0x9686}},
    {0xF9DD, 1, {0x5229}},
    {0xF9DE, 1, {0x540F}},
    {0xF9DF, 1, {0x5C65}},
    {0xF9E0, 1, {0x6613}},
    {0xF9E1, 1, {0x674E}},
    {0xF9E2, 1, {0x68A8}},
    {0xF9E3, 1, {0x6CE5}},
    {0xF9E4, 1, {0x7406}},
    {0xF9E5, 1, {0x75E2}},
    {0xF9E6, 1, {0x7F79}},
    {0xF9E7, 1, {0x88CF}},
    {0xF9E8, 1, {0x88E1}},
    {0xF9E9, 1, {0x91CC}},
    {0xF9EA, 1, {0x96E2}},
    {0xF9EB, 1, {0x533F}},
    {0xF9EC, 1, {0x6EBA}},
    {0xF9ED, 1, {0x541D}},
    {0xF9EE, 1, {0x71D0}},
    {0xF9EF, 1, {0x7498}},
    {0xF9F0, 1, {0x85FA}},
    {0xF9F1, 1, {0x96A3}},
    {0xF9F2, 1, {0x9C57}},
    {0xF9F3, 1, {0x9E9F}},
    {0xF9F4, 1, {0x6797}},
    {0xF9F5, 1, {0x6DCB}},
    {0xF9F6, 1, {0x81E8}},
    {0xF9F7, 1, {0x7ACB}},
    {0xF9F8, 1, {0x7B20}},
    {0xF9F9, 1, {0x7C92}},
    {0xF9FA, 1, {0x72C0}},
    {0xF9FB, 1, {0x7099}},
    {0xF9FC, 1, {0x8B58}},
    {0xF9FD, 1, {0x4EC0}},
    {0xF9FE, 1, {0x8336}},
    {0xF9FF, 1, {0x523A}},
    {0xFA00, 1, {0x5207}},
    {0xFA01, 1, {0x5EA6}},
    {0xFA02, 1, {0x62D3}},
    {0xFA03, 1, {0x7CD6}},
    {0xFA04, 1, {0x5B85}},
    {0xFA05, 1, {0x6D1E}},
    {0xFA06, 1, {0x66B4}},
    {0xFA07, 1, {0x8F3B}},
    {0xFA08, 1, {0x884C}},
    {0xFA09, 1, {0x964D}},
    {0xFA0A, 1, {0x898B}},
    {0xFA0B, 1, {0x5ED3}},
    {0xFA0C, 1, {0x5140}},
    {0xFA0D, 1, {0x55C0}},
    {0xFA10, 1, {0x585A}},
    {0xFA12, 1, {0x6674}},
    {0xFA15, 1, {0x51DE}},
    {0xFA16, 1, {0x732A}},
    {0xFA17, 1, {0x76CA}},
    {0xFA18, 1, {0x793C}},
    {0xFA19, 1, {0x795E}},
    {0xFA1A, 1, {0x7965}},
    {0xFA1B, 1, {0x798F}},
    {0xFA1C, 1, {0x9756}},
    {0xFA1D, 1, {0x7CBE}},
    {0xFA1E, 1, {0x7FBD}},
    {0xFA20, 1, {0x8612}},
    {0xFA22, 1, {0x8AF8}},
    {0xFA25, 1, {0x9038}},
    {0xFA26, 1, {0x90FD}},
    {0xFA2A, 1, {0x98EF}},
    {0xFA2B, 1, {0x98FC}},
    {0xFA2C, 1, {0x9928}},
    {0xFA2D, 1, {0x9DB4}},
    {0xFA2E, 1, {0x90DE}},
    {0xFA2F, 1, {0x96B7}},
    {0xFA30, 1, {0x4FAE}},
    {0xFA31, 1, {0x50E7}},
    {0xFA32, 1, {0x514D}},
    {0xFA33, 1, {0x52C9}},
    {0xFA34, 1, {0x52E4}},
    {0xFA35, 1, {0x5351}},
    {0xFA36, 1, {0x559D}},
    {0xFA37, 1, {0x5606}},
    {0xFA38, 1, {0x5668}},
    {0xFA39, 1, {0x5840}},
    {0xFA3A, 1, {0x58A8}},
    {0xFA3B, 1, {0x5C64}},
    {0xFA3C, 1, {0x5C6E}},
    {0xFA3D, 1, {0x6094}},
    {0xFA3E, 1, {0x6168}},
    {0xFA3F, 1, {0x618E}},
    {0xFA40, 1, {0x61F2}},
    {0xFA41, 1, {0x654F}},
    {0xFA42, 1, {0x65E2}},
    {0xFA43, 1, {0x6691}},
    {0xFA44, 1, {0x6885}},
    {0xFA45, 1, {0x6D77}},
    {0xFA46, 1, {0x6E1A}},
    {0xFA47, 1, {0x6F22}},
    {0xFA48, 1, {0x716E}},
    {0xFA49, 1, {0x722B}},
    {0xFA4A, 1, {0x7422}},
    {0xFA4B, 1, {0x7891}},
    {0xFA4C, 1, {0x793E}},
    {0xFA4D, 1, {0x7949}},
    {0xFA4E, 1, {0x7948}},
    {0xFA4F, 1, {0x7950}},
    {0xFA50, 1, {0x7956}},
    {0xFA51, 1, {0x795D}},
    {0xFA52, 1, {0x798D}},
    {0xFA53, 1, {0x798E}},
    {0xFA54, 1, {0x7A40}},
    {0xFA55, 1, {0x7A81}},
    {0xFA56, 1, {0x7BC0}},
    {0xFA57, 1, {0x7DF4}},
    {0xFA58, 1, {0x7E09}},
    {0xFA59, 1, {0x7E41}},
    {0xFA5A, 1, {0x7F72}},
    {0xFA5B, 1, {0x8005}},
    {0xFA5C, 1, {0x81ED}},
    {0xFA5D, 1, {0x8279}},
    {0xFA5E, 1, {0x8279}},
    {0xFA5F, 1, {0x8457}},
    {0xFA60, 1, {0x8910}},
    {0xFA61, 1, {0x8996}},
    {0xFA62, 1, {0x8B01}},
    {0xFA63, 1, {0x8B39}},
    {0xFA64, 1, {0x8CD3}},
    {0xFA65, 1, {0x8D08}},
    {0xFA66, 1, {0x8FB6}},
    {0xFA67, 1, {0x9038}},
    {0xFA68, 1, {0x96E3}},
    {0xFA69, 1, {0x97FF}},
    {0xFA6A, 1, {0x983B}},
    {0xFA6B, 1, {0x6075}},
    {0xFA6C, 1, {0x242EE}},
    {0xFA6D, 1, {0x8218}},
    {0xFA70, 1, {0x4E26}},
    {0xFA71, 1, {0x51B5}},
    {0xFA72, 1, {0x5168}},
    {0xFA73, 1, {0x4F80}},
    {0xFA74, 1, {0x5145}},
    {0xFA75, 1, {0x5180}},
    {0xFA76, 1, {0x52C7}},
    {0xFA77, 1, {0x52FA}},
    {0xFA78, 1, {0x559D}},
    {0xFA79, 1, {0x5555}},
    {0xFA7A, 1, {0x5599}},
    {0xFA7B, 1, {0x55E2}},
    {0xFA7C, 1, {0x585A}},
    {0xFA7D, 1, {0x58B3}},
    {0xFA7E, 1, {0x5944}},
    {0xFA7F, 1, {0x5954}},
    {0xFA80, 1, {0x5A62}},
    {0xFA81, 1, {0x5B28}},
    {0xFA82, 1, {0x5ED2}},
    {0xFA83, 1, {0x5ED9}},
    {0xFA84, 1, {0x5F69}},
    {0xFA85, 1, {0x5FAD}},
    {0xFA86, 1, {0x60D8}},
    {0xFA87, 1, {0x614E}},
    {0xFA88, 1, {0x6108}},
    {0xFA89, 1, {0x618E}},
    {0xFA8A, 1, {0x6160}},
    {0xFA8B, 1, {0x61F2}},
    {0xFA8C, 1, {0x6234}},
    {0xFA8D, 1, {0x63C4}},
    {0xFA8E, 1, {0x641C}},
    {0xFA8F, 1, {0x6452}},
    {0xFA90, 1, {0x6556}},
    {0xFA91, 1, {0x6674}},
    {0xFA92, 1, {0x6717}},
    {0xFA93, 1, {0x671B}},
    {0xFA94, 1, {0x6756}},
    {0xFA95, 1, {0x6B79}},
    {0xFA96, 1, {0x6BBA}},
    {0xFA97, 1, {0x6D41}},
    {0xFA98, 1, {0x6EDB}},
    {0xFA99, 1, {0x6ECB}},
    {0xFA9A, 1, {0x6F22}},
    {0xFA9B, 1, {0x701E}},
    {0xFA9C, 1, {0x716E}},
    {0xFA9D, 1, {0x77A7}},
    {0xFA9E, 1, {0x7235}},
    {0xFA9F, 1, {0x72AF}},
    {0xFAA0, 1, {0x732A}},
    {0xFAA1, 1, {0x7471}},
    {0xFAA2, 1, {0x7506}},
    {0xFAA3, 1, {0x753B}},
    {0xFAA4, 1, {0x761D}},
    {0xFAA5, 1, {0x761F}},
    {0xFAA6, 1, {0x76CA}},
    {0xFAA7, 1, {0x76DB}},
    {0xFAA8, 1, {0x76F4}},
    {0xFAA9, 1, {0x774A}},
    {0xFAAA, 1, {0x7740}},
    {0xFAAB, 1, {0x78CC}},
    {0xFAAC, 1, {0x7AB1}},
    {0xFAAD, 1, {0x7BC0}},
    {0xFAAE, 1, {0x7C7B}},
    {0xFAAF, 1, {0x7D5B}},
    {0xFAB0, 1, {0x7DF4}},
    {0xFAB1, 1, {0x7F3E}},
    {0xFAB2, 1, {0x8005}},
    {0xFAB3, 1, {0x8352}},
    {0xFAB4, 1, {0x83EF}},
    {0xFAB5, 1, {0x8779}},
    {0xFAB6, 1, {0x8941}},
    {0xFAB7, 1, {0x8986}},
    {0xFAB8, 1, {0x8996}},
    {0xFAB9, 1, {0x8ABF}},
    {0xFABA, 1, {0x8AF8}},
    {0xFABB, 1, {0x8ACB}},
    {0xFABC, 1, {0x8B01}},
    {0xFABD, 1, {0x8AFE}},
    {0xFABE, 1, {0x8AED}},
    {0xFABF, 1, {0x8B39}},
    {0xFAC0, 1, {0x8B8A}},
    {0xFAC1, 1, {0x8D08}},
    {0xFAC2, 1, {0x8F38}},
    {0xFAC3, 1, {0x9072}},
    {0xFAC4, 1, {0x9199}},
    {0xFAC5, 1, {0x9276}},
    {0xFAC6, 1, {0x967C}},
    {0xFAC7, 1, {0x96E3}},
    {0xFAC8, 1, {0x9756}},
    {0xFAC9, 1, {0x97DB}},
    {0xFACA, 1, {0x97FF}},
    {0xFACB, 1, {0x980B}},
    {0xFACC, 1, {0x983B}},
    {0xFACD, 1, {0x9B12}},
    {0xFACE, 1, {0x9F9C}},
    {0xFACF, 1, {0x2284A}},
    {0xFAD0, 1, {0x22844}},
    {0xFAD1, 1, {0x233D5}},
    {0xFAD2, 1, {0x3B9D}},
    {0xFAD3, 1, {0x4018}},
    {0xFAD4, 1, {0x4039}},
    {0xFAD5, 1, {0x25249}},
    {0xFAD6, 1, {0x25CD0}},
    {0xFAD7, 1, {0x27ED3}},
    {0xFAD8, 1, {0x9F43}},
    {0xFAD9, 1, {0x9F8E}},
    {0xFB00, 2, {0x0066, 0x0066}},
    {0xFB01, 2, {0x0066, 0x0069}},
    {0xFB02, 2, {0x0066, 0x006C}},
    {0xFB03, 3, {0x0066, 0x0066, 0x0069}},
    {0xFB04, 3, {0x0066, 0x0066, 0x006C}},
    {0xFB05, 2, {0x0073, 0x0074}},
    {0xFB06, 2, {0x0073, 0x0074}},
    {0xFB13, 2, {0x0574, 0x0576}},
    {0xFB14, 2, {0x0574, 0x0565}},
    {0xFB15, 2, {0x0574, 0x056B}},
    {0xFB16, 2, {0x057E, 0x0576}},
    {0xFB17, 2, {0x0574, 0x056D}},
    {0xFB1D, 1, {0x05D9}},
    {0xFB1F, 1, {0x05F2}},
    {0xFB2A, 1, {0x05E9}},
    {0xFB2B, 1, {0x05E9}},
    {0xFB2C, 1, {0x05E9}},
    {0xFB2D, 1, {0x05E9}},
    {0xFB2E, 1, {0x05D0}},
    {0xFB2F, 1, {0x05D0}},
    {0xFB30, 1, {0x05D0}},
    {0xFB31, 1, {0x05D1}},
    {0xFB32, 1, {0x05D2}},
    {0xFB33, 1, {0x05D3}},
    {0xFB34, 1, {0x05D4}},
    {0xFB35, 1, {0x05D5}},
    {0xFB36, 1, {0x05D6}},
    {0xFB38, 1, {0x05D8}},
    {0xFB39, 1, {0x05D9}},
    {0xFB3A, 1, {0x05DA}},
    {0xFB3B, 1, {0x05DB}},
    {0xFB3C, 1, {0x05DC}},
    {0xFB3E, 1, {0x05DE}},
    {0xFB40, 1, {0x05E0}},
    {0xFB41, 1, {0x05E1}},
    {0xFB43, 1, {0x05E3}},
    {0xFB44, 1, {0x05E4}},
    {0xFB46, 1, {0x05E6}},
    {0xFB47, 1, {0x05E7}},
    {0xFB48, 1, {0x05E8}},
    {0xFB49, 1, {0x05E9}},
    {0xFB4A, 1, {0x05EA}},
    {0xFB4B, 1, {0x05D5}},
    {0xFB4C, 1, {0x05D1}},
    {0xFB4D, 1, {0x05DB}},
    {0xFB4E, 1, {0x05E4}},
    {0xFF21, 1, {0xFF41}},
    {0xFF22, 1, {0xFF42}},
    {0xFF23, 1, {0xFF43}},
    {0xFF24, 1, {0xFF44}},
    {0xFF25, 1, {0xFF45}},
    {0xFF26, 1, {0xFF46}},
    {0xFF27, 1, {0xFF47}},
    {0xFF28, 1, {0xFF48}},
    {0xFF29, 1, {0xFF49}},
    {0xFF2A, 1, {0xFF4A}},
    {0xFF2B, 1, {0xFF4B}},
    {0xFF2C, 1, {0xFF4C}},
    {0xFF2D, 1, {0xFF4D}},
    {0xFF2E, 1, {0xFF4E}},
    {0xFF2F, 1, {0xFF4F}},
    {0xFF30, 1, {0xFF50}},
    {0xFF31, 1, {0xFF51}},
    {0xFF32, 1, {0xFF52}},
    {0xFF33, 1, {0xFF53}},
    {0xFF34, 1, {0xFF54}},
    {0xFF35, 1, {0xFF55}},
    {0xFF36, 1, {0xFF56}},
    {0xFF37, 1, {0xFF57}},
    {0xFF38, 1, {0xFF58}},
    {0xFF39, 1, {0xFF59}},
    {0xFF3A, 1, {0xFF5A}},
    {0x10400, 1, {0x10428}},
    {0x10401, 1, {0x10429}},
    {0x10402, 1, {0x1042A}},
    {0x10403, 1, {0x1042B}},
    {0x10404, 1, {0x1042C}},
    {0x10405, 1, {0x1042D}},
    {0x10406, 1, {0x1042E}},
    {0x10407, 1, {0x1042F}},
    {0x10408, 1, {0x10430}},
    {0x10409, 1, {0x10431}},
    {0x1040A, 1, {0x10432}},
    {0x1040B, 1, {0x10433}},
    {0x1040C, 1, {0x10434}},
    {0x1040D, 1, {0x10435}},
    {0x1040E, 1, {0x10436}},
    {0x1040F, 1, {0x10437}},
    {0x10410, 1, {0x10438}},
    {0x10411, 1, {0x10439}},
    {0x10412, 1, {0x1043A}},
    {0x10413, 1, {0x1043B}},
    {0x10414, 1, {0x1043C}},
    {0x10415, 1, {0x1043D}},
    {0x10416, 1, {0x1043E}},
    {0x10417, 1, {0x1043F}},
    {0x10418, 1, {0x10440}},
    {0x10419, 1, {0x10441}},
    {0x1041A, 1, {0x10442}},
    {0x1041B, 1, {0x10443}},
    {0x1041C, 1, {0x10444}},
    {0x1041D, 1, {0x10445}},
    {0x1041E, 1, {0x10446}},
    {0x1041F, 1, {0x10447}},
    {0x10420, 1, {0x10448}},
    {0x10421, 1, {0x10449}},
    {0x10422, 1, {0x1044A}},
    {0x10423, 1, {0x1044B}},
    {0x10424, 1, {0x1044C}},
    {0x10425, 1, {0x1044D}},
    {0x10426, 1, {0x1044E}},
    {0x10427, 1, {0x1044F}},
    {0x104B0, 1, {0x104D8}},
    {0x104B1, 1, {0x104D9}},
    {0x104B2, 1, {0x104DA}},
    {0x104B3, 1, {0x104DB}},
    {0x104B4, 1, {0x104DC}},
    {0x104B5, 1, {0x104DD}},
    {0x104B6, 1, {0x104DE}},
    {0x104B7, 1, {0x104DF}},
    {0x104B8, 1, {0x104E0}},
    {0x104B9, 1, {0x104E1}},
    {0x104BA, 1, {0x104E2}},
    {0x104BB, 1, {0x104E3}},
    {0x104BC, 1, {0x104E4}},
    {0x104BD, 1, {0x104E5}},
    {0x104BE, 1, {0x104E6}},
    {0x104BF, 1, {0x104E7}},
    {0x104C0, 1, {0x104E8}},
    {0x104C1, 1, {0x104E9}},
    {0x104C2, 1, {0x104EA}},
    {0x104C3, 1, {0x104EB}},
    {0x104C4, 1, {0x104EC}},
    {0x104C5, 1, {0x104ED}},
    {0x104C6, 1, {0x104EE}},
    {0x104C7, 1, {0x104EF}},
    {0x104C8, 1, {0x104F0}},
    {0x104C9, 1, {0x104F1}},
    {0x104CA, 1, {0x104F2}},
    {0x104CB, 1, {0x104F3}},
    {0x104CC, 1, {0x104F4}},
    {0x104CD, 1, {0x104F5}},
    {0x104CE, 1, {0x104F6}},
    {0x104CF, 1, {0x104F7}},
    {0x104D0, 1, {0x104F8}},
    {0x104D1, 1, {0x104F9}},
    {0x104D2, 1, {0x104FA}},
    {0x104D3, 1, {0x104FB}},
    {0x10C80, 1, {0x10CC0}},
    {0x10C81, 1, {0x10CC1}},
    {0x10C82, 1, {0x10CC2}},
    {0x10C83, 1, {0x10CC3}},
    {0x10C84, 1, {0x10CC4}},
    {0x10C85, 1, {0x10CC5}},
    {0x10C86, 1, {0x10CC6}},
    {0x10C87, 1, {0x10CC7}},
    {0x10C88, 1, {0x10CC8}},
    {0x10C89, 1, {0x10CC9}},
    {0x10C8A, 1, {0x10CCA}},
    {0x10C8B, 1, {0x10CCB}},
    {0x10C8C, 1, {0x10CCC}},
    {0x10C8D, 1, {0x10CCD}},
    {0x10C8E, 1, {0x10CCE}},
    {0x10C8F, 1, {0x10CCF}},
    {0x10C90, 1, {0x10CD0}},
    {0x10C91, 1, {0x10CD1}},
    {0x10C92, 1, {0x10CD2}},
    {0x10C93, 1, {0x10CD3}},
    {0x10C94, 1, {0x10CD4}},
    {0x10C95, 1, {0x10CD5}},
    {0x10C96, 1, {0x10CD6}},
    {0x10C97, 1, {0x10CD7}},
    {0x10C98, 1, {0x10CD8}},
    {0x10C99, 1, {0x10CD9}},
    {0x10C9A, 1, {0x10CDA}},
    {0x10C9B, 1, {0x10CDB}},
    {0x10C9C, 1, {0x10CDC}},
    {0x10C9D, 1, {0x10CDD}},
    {0x10C9E, 1, {0x10CDE}},
    {0x10C9F, 1, {0x10CDF}},
    {0x10CA0, 1, {0x10CE0}},
    {0x10CA1, 1, {0x10CE1}},
    {0x10CA2, 1, {0x10CE2}},
    {0x10CA3, 1, {0x10CE3}},
    {0x10CA4, 1, {0x10CE4}},
    {0x10CA5, 1, {0x10CE5}},
    {0x10CA6, 1, {0x10CE6}},
    {0x10CA7, 1, {0x10CE7}},
    {0x10CA8, 1, {0x10CE8}},
    {0x10CA9, 1, {0x10CE9}},
    {0x10CAA, 1, {0x10CEA}},
    {0x10CAB, 1, {0x10CEB}},
    {0x10CAC, 1, {0x10CEC}},
    {0x10CAD, 1, {0x10CED}},
    {0x10CAE, 1, {0x10CEE}},
    {0x10CAF, 1, {0x10CEF}},
    {0x10CB0, 1, {0x10CF0}},
    {0x10CB1, 1, {0x10CF1}},
    {0x10CB2, 1, {0x10CF2}},
    {0x1109A, 1, {0x11099}},
    {0x1109C, 1, {0x1109B}},
    {0x110AB, 1, {0x110A5}},
    {0x118A0, 1, {0x118C0}},
    {0x118A1, 1, {0x118C1}},
    {0x118A2, 1, {0x118C2}},
    {0x118A3, 1, {0x118C3}},
    {0x118A4, 1, {0x118C4}},
    {0x118A5, 1, {0x118C5}},
    {0x118A6, 1, {0x118C6}},
    {0x118A7, 1, {0x118C7}},
    {0x118A8, 1, {0x118C8}},
    {0x118A9, 1, {0x118C9}},
    {0x118AA, 1, {0x118CA}},
    {0x118AB, 1, {0x118CB}},
    {0x118AC, 1, {0x118CC}},
    {0x118AD, 1, {0x118CD}},
    {0x118AE, 1, {0x118CE}},
    {0x118AF, 1, {0x118CF}},
    {0x118B0, 1, {0x118D0}},
    {0x118B1, 1, {0x118D1}},
    {0x118B2, 1, {0x118D2}},
    {0x118B3, 1, {0x118D3}},
    {0x118B4, 1, {0x118D4}},
    {0x118B5, 1, {0x118D5}},
    {0x118B6, 1, {0x118D6}},
    {0x118B7, 1, {0x118D7}},
    {0x118B8, 1, {0x118D8}},
    {0x118B9, 1, {0x118D9}},
    {0x118BA, 1, {0x118DA}},
    {0x118BB, 1, {0x118DB}},
    {0x118BC, 1, {0x118DC}},
    {0x118BD, 1, {0x118DD}},
    {0x118BE, 1, {0x118DE}},
    {0x118BF, 1, {0x118DF}},
    {0x16E40, 1, {0x16E60}},
    {0x16E41, 1, {0x16E61}},
    {0x16E42, 1, {0x16E62}},
    {0x16E43, 1, {0x16E63}},
    {0x16E44, 1, {0x16E64}},
    {0x16E45, 1, {0x16E65}},
    {0x16E46, 1, {0x16E66}},
    {0x16E47, 1, {0x16E67}},
    {0x16E48, 1, {0x16E68}},
    {0x16E49, 1, {0x16E69}},
    {0x16E4A, 1, {0x16E6A}},
    {0x16E4B, 1, {0x16E6B}},
    {0x16E4C, 1, {0x16E6C}},
    {0x16E4D, 1, {0x16E6D}},
    {0x16E4E, 1, {0x16E6E}},
    {0x16E4F, 1, {0x16E6F}},
    {0x16E50, 1, {0x16E70}},
    {0x16E51, 1, {0x16E71}},
    {0x16E52, 1, {0x16E72}},
    {0x16E53, 1, {0x16E73}},
    {0x16E54, 1, {0x16E74}},
    {0x16E55, 1, {0x16E75}},
    {0x16E56, 1, {0x16E76}},
    {0x16E57, 1, {0x16E77}},
    {0x16E58, 1, {0x16E78}},
    {0x16E59, 1, {0x16E79}},
    {0x16E5A, 1, {0x16E7A}},
    {0x16E5B, 1, {0x16E7B}},
    {0x16E5C, 1, {0x16E7C}},
    {0x16E5D, 1, {0x16E7D}},
    {0x16E5E, 1, {0x16E7E}},
    {0x16E5F, 1, {0x16E7F}},
    {0x1E900, 1, {0x1E922}},
    {0x1E901, 1, {0x1E923}},
    {0x1E902, 1, {0x1E924}},
    {0x1E903, 1, {0x1E925}},
    {0x1E904, 1, {0x1E926}},
    {0x1E905, 1, {0x1E927}},
    {0x1E906, 1, {0x1E928}},
    {0x1E907, 1, {0x1E929}},
    {0x1E908, 1, {0x1E92A}},
    {0x1E909, 1, {0x1E92B}},
    {0x1E90A, 1, {0x1E92C}},
    {0x1E90B, 1, {0x1E92D}},
    {0x1E90C, 1, {0x1E92E}},
    {0x1E90D, 1, {0x1E92F}},
    {0x1E90E, 1, {0x1E930}},
    {0x1E90F, 1, {0x1E931}},
    {0x1E910, 1, {0x1E932}},
    {0x1E911, 1, {0x1E933}},
    {0x1E912, 1, {0x1E934}},
    {0x1E913, 1, {0x1E935}},
    {0x1E914, 1, {0x1E936}},
    {0x1E915, 1, {0x1E937}},
    {0x1E916, 1, {0x1E938}},
    {0x1E917, 1, {0x1E939}},
    {0x1E918, 1, {0x1E93A}},
    {0x1E919, 1, {0x1E93B}},
    {0x1E91A, 1, {0x1E93C}},
    {0x1E91B, 1, {0x1E93D}},
    {0x1E91C, 1, {0x1E93E}},
    {0x1E91D, 1, {0x1E93F}},
    {0x1E91E, 1, {0x1E940}},
    {0x1E91F, 1, {0x1E941}},
    {0x1E920, 1, {0x1E942}},
    {0x1E921, 1, {0x1E943}},
    {0x2F800, 1, {0x4E3D}},
    {0x2F801, 1, {0x4E38}},
    {0x2F802, 1, {0x4E41}},
    {0x2F803, 1, {0x20122}},
    {0x2F804, 1, {0x4F60}},
    {0x2F805, 1, {0x4FAE}},
    {0x2F806, 1, {0x4FBB}},
    {0x2F807, 1, {0x5002}},
    {0x2F808, 1, {0x507A}},
    {0x2F809, 1, {0x5099}},
    {0x2F80A, 1, {0x50E7}},
    {0x2F80B, 1, {0x50CF}},
    {0x2F80C, 1, {0x349E}},
    {0x2F80D, 1, {0x2063A}},
    {0x2F80E, 1, {0x514D}},
    {0x2F80F, 1, {0x5154}},
    {0x2F810, 1, {0x5164}},
    {0x2F811, 1, {0x5177}},
    {0x2F812, 1, {0x2051C}},
    {0x2F813, 1, {0x34B9}},
    {0x2F814, 1, {0x5167}},
    {0x2F815, 1, {0x518D}},
    {0x2F816, 1, {0x2054B}},
    {0x2F817, 1, {0x5197}},
    {0x2F818, 1, {0x51A4}},
    {0x2F819, 1, {0x4ECC}},
    {0x2F81A, 1, {0x51AC}},
    {0x2F81B, 1, {0x51B5}},
    {0x2F81C, 1, {0x291DF}},
    {0x2F81D, 1, {0x51F5}},
    {0x2F81E, 1, {0x5203}},
    {0x2F81F, 1, {0x34DF}},
    {0x2F820, 1, {0x523B}},
    {0x2F821, 1, {0x5246}},
    {0x2F822, 1, {0x5272}},
    {0x2F823, 1, {0x5277}},
    {0x2F824, 1, {0x3515}},
    {0x2F825, 1, {0x52C7}},
    {0x2F826, 1, {0x52C9}},
    {0x2F827, 1, {0x52E4}},
    {0x2F828, 1, {0x52FA}},
    {0x2F829, 1, {0x5305}},
    {0x2F82A, 1, {0x5306}},
    {0x2F82B, 1, {0x5317}},
    {0x2F82C, 1, {0x5349}},
    {0x2F82D, 1, {0x5351}},
    {0x2F82E, 1, {0x535A}},
    {0x2F82F, 1, {0x5373}},
    {0x2F830, 1, {0x537D}},
    {0x2F831, 1, {0x537F}},
    {0x2F832, 1, {0x537F}},
    {0x2F833, 1, {0x537F}},
    {0x2F834, 1, {0x20A2C}},
    {0x2F835, 1, {0x7070}},
    {0x2F836, 1, {0x53CA}},
    {0x2F837, 1, {0x53DF}},
    {0x2F838, 1, {0x20B63}},
    {0x2F839, 1, {0x53EB}},
    {0x2F83A, 1, {0x53F1}},
    {0x2F83B, 1, {0x5406}},
    {0x2F83C, 1, {0x549E}},
    {0x2F83D, 1, {0x5438}},
    {0x2F83E, 1, {0x5448}},
    {0x2F83F, 1, {0x5468}},
    {0x2F840, 1, {0x54A2}},
    {0x2F841, 1, {0x54F6}},
    {0x2F842, 1, {0x5510}},
    {0x2F843, 1, {0x5553}},
    {0x2F844, 1, {0x5563}},
    {0x2F845, 1, {0x5584}},
    {0x2F846, 1, {0x5584}},
    {0x2F847, 1, {0x5599}},
    {0x2F848, 1, {0x55AB}},
    {0x2F849, 1, {0x55B3}},
    {0x2F84A, 1, {0x55C2}},
    {0x2F84B, 1, {0x5716}},
    {0x2F84C, 1, {0x5606}},
    {0x2F84D, 1, {0x5717}},
    {0x2F84E, 1, {0x5651}},
    {0x2F84F, 1, {0x5674}},
    {0x2F850, 1, {0x5207}},
    {0x2F851, 1, {0x58EE}},
    {0x2F852, 1, {0x57CE}},
    {0x2F853, 1, {0x57F4}},
    {0x2F854, 1, {0x580D}},
    {0x2F855, 1, {0x578B}},
    {0x2F856, 1, {0x5832}},
    {0x2F857, 1, {0x5831}},
    {0x2F858, 1, {0x58AC}},
    {0x2F859, 1, {0x214E4}},
    {0x2F85A, 1, {0x58F2}},
    {0x2F85B, 1, {0x58F7}},
    {0x2F85C, 1, {0x5906}},
    {0x2F85D, 1, {0x591A}},
    {0x2F85E, 1, {0x5922}},
    {0x2F85F, 1, {0x5962}},
    {0x2F860, 1, {0x216A8}},
    {0x2F861, 1, {0x216EA}},
    {0x2F862, 1, {0x59EC}},
    {0x2F863, 1, {0x5A1B}},
    {0x2F864, 1, {0x5A27}},
    {0x2F865, 1, {0x59D8}},
    {0x2F866, 1, {0x5A66}},
    {0x2F867, 1, {0x36EE}},
    {0x2F868, 1, {0x36FC}},
    {0x2F869, 1, {0x5B08}},
    {0x2F86A, 1, {0x5B3E}},
    {0x2F86B, 1, {0x5B3E}},
    {0x2F86C, 1, {0x219C8}},
    {0x2F86D, 1, {0x5BC3}},
    {0x2F86E, 1, {0x5BD8}},
    {0x2F86F, 1, {0x5BE7}},
    {0x2F870, 1, {0x5BF3}},
    {0x2F871, 1, {0x21B18}},
    {0x2F872, 1, {0x5BFF}},
    {0x2F873, 1, {0x5C06}},
    {0x2F874, 1, {0x5F53}},
    {0x2F875, 1, {0x5C22}},
    {0x2F876, 1, {0x3781}},
    {0x2F877, 1, {0x5C60}},
    {0x2F878, 1, {0x5C6E}},
    {0x2F879, 1, {0x5CC0}},
    {0x2F87A, 1, {0x5C8D}},
    {0x2F87B, 1, {0x21DE4}},
    {0x2F87C, 1, {0x5D43}},
    {0x2F87D, 1, {0x21DE6}},
    {0x2F87E, 1, {0x5D6E}},
    {0x2F87F, 1, {0x5D6B}},
    {0x2F880, 1, {0x5D7C}},
    {0x2F881, 1, {0x5DE1}},
    {0x2F882, 1, {0x5DE2}},
    {0x2F883, 1, {0x382F}},
    {0x2F884, 1, {0x5DFD}},
    {0x2F885, 1, {0x5E28}},
    {0x2F886, 1, {0x5E3D}},
    {0x2F887, 1, {0x5E69}},
    {0x2F888, 1, {0x3862}},
    {0x2F889, 1, {0x22183}},
    {0x2F88A, 1, {0x387C}},
    {0x2F88B, 1, {0x5EB0}},
    {0x2F88C, 1, {0x5EB3}},
    {0x2F88D, 1, {0x5EB6}},
    {0x2F88E, 1, {0x5ECA}},
    {0x2F88F, 1, {0x2A392}},
    {0x2F890, 1, {0x5EFE}},
    {0x2F891, 1, {0x22331}},
    {0x2F892, 1, {0x22331}},
    {0x2F893, 1, {0x8201}},
    {0x2F894, 1, {0x5F22}},
    {0x2F895, 1, {0x5F22}},
    {0x2F896, 1, {0x38C7}},
    {0x2F897, 1, {0x232B8}},
    {0x2F898, 1, {0x261DA}},
    {0x2F899, 1, {0x5F62}},
    {0x2F89A, 1, {0x5F6B}},
    {0x2F89B, 1, {0x38E3}},
    {0x2F89C, 1, {0x5F9A}},
    {0x2F89D, 1, {0x5FCD}},
    {0x2F89E, 1, {0x5FD7}},
    {0x2F89F, 1, {0x5FF9}},
    {0x2F8A0, 1, {0x6081}},
    {0x2F8A1, 1, {0x393A}},
    {0x2F8A2, 1, {0x391C}},
    {0x2F8A3, 1, {0x6094}},
    {0x2F8A4, 1, {0x226D4}},
    {0x2F8A5, 1, {0x60C7}},
    {0x2F8A6, 1, {0x6148}},
    {0x2F8A7, 1, {0x614C}},
    {0x2F8A8, 1, {0x614E}},
    {0x2F8A9, 1, {0x614C}},
    {0x2F8AA, 1, {0x617A}},
    {0x2F8AB, 1, {0x618E}},
    {0x2F8AC, 1, {0x61B2}},
    {0x2F8AD, 1, {0x61A4}},
    {0x2F8AE, 1, {0x61AF}},
    {0x2F8AF, 1, {0x61DE}},
    {0x2F8B0, 1, {0x61F2}},
    {0x2F8B1, 1, {0x61F6}},
    {0x2F8B2, 1, {0x6210}},
    {0x2F8B3, 1, {0x621B}},
    {0x2F8B4, 1, {0x625D}},
    {0x2F8B5, 1, {0x62B1}},
    {0x2F8B6, 1, {0x62D4}},
    {0x2F8B7, 1, {0x6350}},
    {0x2F8B8, 1, {0x22B0C}},
    {0x2F8B9, 1, {0x633D}},
    {0x2F8BA, 1, {0x62FC}},
    {0x2F8BB, 1, {0x6368}},
    {0x2F8BC, 1, {0x6383}},
    {0x2F8BD, 1, {0x63E4}},
    {0x2F8BE, 1, {0x22BF1}},
    {0x2F8BF, 1, {0x6422}},
    {0x2F8C0, 1, {0x63C5}},
    {0x2F8C1, 1, {0x63A9}},
    {0x2F8C2, 1, {0x3A2E}},
    {0x2F8C3, 1, {0x6469}},
    {0x2F8C4, 1, {0x647E}},
    {0x2F8C5, 1, {0x649D}},
    {0x2F8C6, 1, {0x6477}},
    {0x2F8C7, 1, {0x3A6C}},
    {0x2F8C8, 1, {0x654F}},
    {0x2F8C9, 1, {0x656C}},
    {0x2F8CA, 1, {0x2300A}},
    {0x2F8CB, 1, {0x65E3}},
    {0x2F8CC, 1, {0x66F8}},
    {0x2F8CD, 1, {0x6649}},
    {0x2F8CE, 1, {0x3B19}},
    {0x2F8CF, 1, {0x6691}},
    {0x2F8D0, 1, {0x3B08}},
    {0x2F8D1, 1, {0x3AE4}},
    {0x2F8D2, 1, {0x5192}},
    {0x2F8D3, 1, {0x5195}},
    {0x2F8D4, 1, {0x6700}},
    {0x2F8D5, 1, {0x669C}},
    {0x2F8D6, 1, {0x80AD}},
    {0x2F8D7, 1, {0x43D9}},
    {0x2F8D8, 1, {0x6717}},
    {0x2F8D9, 1, {0x671B}},
    {0x2F8DA, 1, {0x6721}},
    {0x2F8DB, 1, {0x675E}},
    {0x2F8DC, 1, {0x6753}},
    {0x2F8DD, 1, {0x233C3}},
    {0x2F8DE, 1, {0x3B49}},
    {0x2F8DF, 1, {0x67FA}},
    {0x2F8E0, 1, {0x6785}},
    {0x2F8E1, 1, {0x6852}},
    {0x2F8E2, 1, {0x6885}},
    {0x2F8E3, 1, {0x2346D}},
    {0x2F8E4, 1, {0x688E}},
    {0x2F8E5, 1, {0x681F}},
    {0x2F8E6, 1, {0x6914}},
    {0x2F8E7, 1, {0x3B9D}},
    {0x2F8E8, 1, {0x6942}},
    {0x2F8E9, 1, {0x69A3}},
    {0x2F8EA, 1, {0x69EA}},
    {0x2F8EB, 1, {0x6AA8}},
    {0x2F8EC, 1, {0x236A3}},
    {0x2F8ED, 1, {0x6ADB}},
    {0x2F8EE, 1, {0x3C18}},
    {0x2F8EF, 1, {0x6B21}},
    {0x2F8F0, 1, {0x238A7}},
    {0x2F8F1, 1, {0x6B54}},
    {0x2F8F2, 1, {0x3C4E}},
    {0x2F8F3, 1, {0x6B72}},
    {0x2F8F4, 1, {0x6B9F}},
    {0x2F8F5, 1, {0x6BBA}},
    {0x2F8F6, 1, {0x6BBB}},
    {0x2F8F7, 1, {0x23A8D}},
    {0x2F8F8, 1, {0x21D0B}},
    {0x2F8F9, 1, {0x23AFA}},
    {0x2F8FA, 1, {0x6C4E}},
    {0x2F8FB, 1, {0x23CBC}},
    {0x2F8FC, 1, {0x6CBF}},
    {0x2F8FD, 1, {0x6CCD}},
    {0x2F8FE, 1, {0x6C67}},
    {0x2F8FF, 1, {0x6D16}},
    {0x2F900, 1, {0x6D3E}},
    {0x2F901, 1, {0x6D77}},
    {0x2F902, 1, {0x6D41}},
    {0x2F903, 1, {0x6D69}},
    {0x2F904, 1, {0x6D78}},
    {0x2F905, 1, {0x6D85}},
    {0x2F906, 1, {0x23D1E}},
    {0x2F907, 1, {0x6D34}},
    {0x2F908, 1, {0x6E2F}},
    {0x2F909, 1, {0x6E6E}},
    {0x2F90A, 1, {0x3D33}},
    {0x2F90B, 1, {0x6ECB}},
    {0x2F90C, 1, {0x6EC7}},
    {0x2F90D, 1, {0x23ED1}},
    {0x2F90E, 1, {0x6DF9}},
    {0x2F90F, 1, {0x6F6E}},
    {0x2F910, 1, {0x23F5E}},
    {0x2F911, 1, {0x23F8E}},
    {0x2F912, 1, {0x6FC6}},
    {0x2F913, 1, {0x7039}},
    {0x2F914, 1, {0x701E}},
    {0x2F915, 1, {0x701B}},
    {0x2F916, 1, {0x3D96}},
    {0x2F917, 1, {0x704A}},
    {0x2F918, 1, {0x707D}},
    {0x2F919, 1, {0x7077}},
    {0x2F91A, 1, {0x70AD}},
    {0x2F91B, 1, {0x20525}},
    {0x2F91C, 1, {0x7145}},
    {0x2F91D, 1, {0x24263}},
    {0x2F91E, 1, {0x719C}},
    {0x2F91F, 1, {0x243AB}},
    {0x2F920, 1, {0x7228}},
    {0x2F921, 1, {0x7235}},
    {0x2F922, 1, {0x7250}},
    {0x2F923, 1, {0x24608}},
    {0x2F924, 1, {0x7280}},
    {0x2F925, 1, {0x7295}},
    {0x2F926, 1, {0x24735}},
    {0x2F927, 1, {0x24814}},
    {0x2F928, 1, {0x737A}},
    {0x2F929, 1, {0x738B}},
    {0x2F92A, 1, {0x3EAC}},
    {0x2F92B, 1, {0x73A5}},
    {0x2F92C, 1, {0x3EB8}},
    {0x2F92D, 1, {0x3EB8}},
    {0x2F92E, 1, {0x7447}},
    {0x2F92F, 1, {0x745C}},
    {0x2F930, 1, {0x7471}},
    {0x2F931, 1, {0x7485}},
    {0x2F932, 1, {0x74CA}},
    {0x2F933, 1, {0x3F1B}},
    {0x2F934, 1, {0x7524}},
    {0x2F935, 1, {0x24C36}},
    {0x2F936, 1, {0x753E}},
    {0x2F937, 1, {0x24C92}},
    {0x2F938, 1, {0x7570}},
    {0x2F939, 1, {0x2219F}},
    {0x2F93A, 1, {0x7610}},
    {0x2F93B, 1, {0x24FA1}},
    {0x2F93C, 1, {0x24FB8}},
    {0x2F93D, 1, {0x25044}},
    {0x2F93E, 1, {0x3FFC}},
    {0x2F93F, 1, {0x4008}},
    {0x2F940, 1, {0x76F4}},
    {0x2F941, 1, {0x250F3}},
    {0x2F942, 1, {0x250F2}},
    {0x2F943, 1, {0x25119}},
    {0x2F944, 1, {0x25133}},
    {0x2F945, 1, {0x771E}},
    {0x2F946, 1, {0x771F}},
    {0x2F947, 1, {0x771F}},
    {0x2F948, 1, {0x774A}},
    {0x2F949, 1, {0x4039}},
    {0x2F94A, 1, {0x778B}},
    {0x2F94B, 1, {0x4046}},
    {0x2F94C, 1, {0x4096}},
    {0x2F94D, 1, {0x2541D}},
    {0x2F94E, 1, {0x784E}},
    {0x2F94F, 1, {0x788C}},
    {0x2F950, 1, {0x78CC}},
    {0x2F951, 1, {0x40E3}},
    {0x2F952, 1, {0x25626}},
    {0x2F953, 1, {0x7956}},
    {0x2F954, 1, {0x2569A}},
    {0x2F955, 1, {0x256C5}},
    {0x2F956, 1, {0x798F}},
    {0x2F957, 1, {0x79EB}},
    {0x2F958, 1, {0x412F}},
    {0x2F959, 1, {0x7A40}},
    {0x2F95A, 1, {0x7A4A}},
    {0x2F95B, 1, {0x7A4F}},
    {0x2F95C, 1, {0x2597C}},
    {0x2F95D, 1, {0x25AA7}},
    {0x2F95E, 1, {0x25AA7}},
    {0x2F95F, 1, {0x7AEE}},
    {0x2F960, 1, {0x4202}},
    {0x2F961, 1, {0x25BAB}},
    {0x2F962, 1, {0x7BC6}},
    {0x2F963, 1, {0x7BC9}},
    {0x2F964, 1, {0x4227}},
    {0x2F965, 1, {0x25C80}},
    {0x2F966, 1, {0x7CD2}},
    {0x2F967, 1, {0x42A0}},
    {0x2F968, 1, {0x7CE8}},
    {0x2F969, 1, {0x7CE3}},
    {0x2F96A, 1, {0x7D00}},
    {0x2F96B, 1, {0x25F86}},
    {0x2F96C, 1, {0x7D63}},
    {0x2F96D, 1, {0x4301}},
    {0x2F96E, 1, {0x7DC7}},
    {0x2F96F, 1, {0x7E02}},
    {0x2F970, 1, {0x7E45}},
    {0x2F971, 1, {0x4334}},
    {0x2F972, 1, {0x26228}},
    {0x2F973, 1, {0x26247}},
    {0x2F974, 1, {0x4359}},
    {0x2F975, 1, {0x262D9}},
    {0x2F976, 1, {0x7F7A}},
    {0x2F977, 1, {0x2633E}},
    {0x2F978, 1, {0x7F95}},
    {0x2F979, 1, {0x7FFA}},
    {0x2F97A, 1, {0x8005}},
    {0x2F97B, 1, {0x264DA}},
    {0x2F97C, 1, {0x26523}},
    {0x2F97D, 1, {0x8060}},
    {0x2F97E, 1, {0x265A8}},
    {0x2F97F, 1, {0x8070}},
    {0x2F980, 1, {0x2335F}},
    {0x2F981, 1, {0x43D5}},
    {0x2F982, 1, {0x80B2}},
    {0x2F983, 1, {0x8103}},
    {0x2F984, 1, {0x440B}},
    {0x2F985, 1, {0x813E}},
    {0x2F986, 1, {0x5AB5}},
    {0x2F987, 1, {0x267A7}},
    {0x2F988, 1, {0x267B5}},
    {0x2F989, 1, {0x23393}},
    {0x2F98A, 1, {0x2339C}},
    {0x2F98B, 1, {0x8201}},
    {0x2F98C, 1, {0x8204}},
    {0x2F98D, 1, {0x8F9E}},
    {0x2F98E, 1, {0x446B}},
    {0x2F98F, 1, {0x8291}},
    {0x2F990, 1, {0x828B}},
    {0x2F991, 1, {0x829D}},
    {0x2F992, 1, {0x52B3}},
    {0x2F993, 1, {0x82B1}},
    {0x2F994, 1, {0x82B3}},
    {0x2F995, 1, {0x82BD}},
    {0x2F996, 1, {0x82E6}},
    {0x2F997, 1, {0x26B3C}},
    {0x2F998, 1, {0x82E5}},
    {0x2F999, 1, {0x831D}},
    {0x2F99A, 1, {0x8363}},
    {0x2F99B, 1, {0x83AD}},
    {0x2F99C, 1, {0x8323}},
    {0x2F99D, 1, {0x83BD}},
    {0x2F99E, 1, {0x83E7}},
    {0x2F99F, 1, {0x8457}},
    {0x2F9A0, 1, {0x8353}},
    {0x2F9A1, 1, {0x83CA}},
    {0x2F9A2, 1, {0x83CC}},
    {0x2F9A3, 1, {0x83DC}},
    {0x2F9A4, 1, {0x26C36}},
    {0x2F9A5, 1, {0x26D6B}},
    {0x2F9A6, 1, {0x26CD5}},
    {0x2F9A7, 1, {0x452B}},
    {0x2F9A8, 1, {0x84F1}},
    {0x2F9A9, 1, {0x84F3}},
    {0x2F9AA, 1, {0x8516}},
    {0x2F9AB, 1, {0x273CA}},
    {0x2F9AC, 1, {0x8564}},
    {0x2F9AD, 1, {0x26F2C}},
    {0x2F9AE, 1, {0x455D}},
    {0x2F9AF, 1, {0x4561}},
    {0x2F9B0, 1, {0x26FB1}},
    {0x2F9B1, 1, {0x270D2}},
    {0x2F9B2, 1, {0x456B}},
    {0x2F9B3, 1, {0x8650}},
    {0x2F9B4, 1, {0x865C}},
    {0x2F9B5, 1, {0x8667}},
    {0x2F9B6, 1, {0x8669}},
    {0x2F9B7, 1, {0x86A9}},
    {0x2F9B8, 1, {0x8688}},
    {0x2F9B9, 1, {0x870E}},
    {0x2F9BA, 1, {0x86E2}},
    {0x2F9BB, 1, {0x8779}},
    {0x2F9BC, 1, {0x8728}},
    {0x2F9BD, 1, {0x876B}},
    {0x2F9BE, 1, {0x8786}},
    {0x2F9BF, 1, {0x45D7}},
    {0x2F9C0, 1, {0x87E1}},
    {0x2F9C1, 1, {0x8801}},
    {0x2F9C2, 1, {0x45F9}},
    {0x2F9C3, 1, {0x8860}},
    {0x2F9C4, 1, {0x8863}},
    {0x2F9C5, 1, {0x27667}},
    {0x2F9C6, 1, {0x88D7}},
    {0x2F9C7, 1, {0x88DE}},
    {0x2F9C8, 1, {0x4635}},
    {0x2F9C9, 1, {0x88FA}},
    {0x2F9CA, 1, {0x34BB}},
    {0x2F9CB, 1, {0x278AE}},
    {0x2F9CC, 1, {0x27966}},
    {0x2F9CD, 1, {0x46BE}},
    {0x2F9CE, 1, {0x46C7}},
    {0x2F9CF, 1, {0x8AA0}},
    {0x2F9D0, 1, {0x8AED}},
    {0x2F9D1, 1, {0x8B8A}},
    {0x2F9D2, 1, {0x8C55}},
    {0x2F9D3, 1, {0x27CA8}},
    {0x2F9D4, 1, {0x8CAB}},
    {0x2F9D5, 1, {0x8CC1}},
    {0x2F9D6, 1, {0x8D1B}},
    {0x2F9D7, 1, {0x8D77}},
    {0x2F9D8, 1, {0x27F2F}},
    {0x2F9D9, 1, {0x20804}},
    {0x2F9DA, 1, {0x8DCB}},
    {0x2F9DB, 1, {0x8DBC}},
    {0x2F9DC, 1, {0x8DF0}},
    {0x2F9DD, 1, {0x208DE}},
    {0x2F9DE, 1, {0x8ED4}},
    {0x2F9DF, 1, {0x8F38}},
    {0x2F9E0, 1, {0x285D2}},
    {0x2F9E1, 1, {0x285ED}},
    {0x2F9E2, 1, {0x9094}},
    {0x2F9E3, 1, {0x90F1}},
    {0x2F9E4, 1, {0x9111}},
    {0x2F9E5, 1, {0x2872E}},
    {0x2F9E6, 1, {0x911B}},
    {0x2F9E7, 1, {0x9238}},
    {0x2F9E8, 1, {0x92D7}},
    {0x2F9E9, 1, {0x92D8}},
    {0x2F9EA, 1, {0x927C}},
    {0x2F9EB, 1, {0x93F9}},
    {0x2F9EC, 1, {0x9415}},
    {0x2F9ED, 1, {0x28BFA}},
    {0x2F9EE, 1, {0x958B}},
    {0x2F9EF, 1, {0x4995}},
    {0x2F9F0, 1, {0x95B7}},
    {0x2F9F1, 1, {0x28D77}},
    {0x2F9F2, 1, {0x49E6}},
    {0x2F9F3, 1, {0x96C3}},
    {0x2F9F4, 1, {0x5DB2}},
    {0x2F9F5, 1, {0x9723}},
    {0x2F9F6, 1, {0x29145}},
    {0x2F9F7, 1, {0x2921A}},
    {0x2F9F8, 1, {0x4A6E}},
    {0x2F9F9, 1, {0x4A76}},
    {0x2F9FA, 1, {0x97E0}},
    {0x2F9FB, 1, {0x2940A}},
    {0x2F9FC, 1, {0x4AB2}},
    {0x2F9FD, 1, {0x29496}},
    {0x2F9FE, 1, {0x980B}},
    {0x2F9FF, 1, {0x980B}},
    {0x2FA00, 1, {0x9829}},
    {0x2FA01, 1, {0x295B6}},
    {0x2FA02, 1, {0x98E2}},
    {0x2FA03, 1, {0x4B33}},
    {0x2FA04, 1, {0x9929}},
    {0x2FA05, 1, {0x99A7}},
    {0x2FA06, 1, {0x99C2}},
    {0x2FA07, 1, {0x99FE}},
    {0x2FA08, 1, {0x4BCE}},
    {0x2FA09, 1, {0x29B30}},
    {0x2FA0A, 1, {0x9B12}},
    {0x2FA0B, 1, {0x9C40}},
    {0x2FA0C, 1, {0x9CFD}},
    {0x2FA0D, 1, {0x4CCE}},
    {0x2FA0E, 1, {0x4CED}},
    {0x2FA0F, 1, {0x9D67}},
    {0x2FA10, 1, {0x2A0CE}},
    {0x2FA11, 1, {0x4CF8}},
    {0x2FA12, 1, {0x2A105}},
    {0x2FA13, 1, {0x2A20E}},
    {0x2FA14, 1, {0x2A291}},
    {0x2FA15, 1, {0x9EBB}},
    {0x2FA16, 1, {0x4D56}},
    {0x2FA17, 1, {0x9EF9}},
    {0x2FA18, 1, {0x9EFE}},
    {0x2FA19, 1, {0x9F05}},
    {0x2FA1A, 1, {0x9F0F}},
    {0x2FA1B, 1, {0x9F16}},
    {0x2FA1C, 1, {0x9F3B}},
    {0x2FA1D, 1, {0x2A600}},
}};

}  // namespace dicoder::detail
