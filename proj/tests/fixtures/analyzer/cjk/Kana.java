// counts kana
class Kana {
    int かず;
}
