#!/usr/bin/env python3
# Copyright (c) 2026 The romantok Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the sample data shipped under data/.

Needs pypinyin and pykakasi. The outputs are committed, so this only has to
be rerun when the word lists below change. Everything is seeded.
"""

import argparse
import pathlib
import random
import re

from pypinyin import Style, pinyin
import pykakasi

ROMAN_RE = re.compile(r"^[a-z]+[0-9]?$")

# Curated polyphones: readings in default-first order.
ZH_POLYPHONES = {
    "差": ["cha4", "cha1", "chai1", "ci1"],
    "不": ["bu4", "bu2"],
    "行": ["xing2", "hang2"],
    "长": ["chang2", "zhang3"],
    "重": ["zhong4", "chong2"],
    "乐": ["le4", "yue4"],
    "还": ["hai2", "huan2"],
    "了": ["le5", "liao3"],
    "着": ["zhe5", "zhao2", "zhuo2"],
    "得": ["de5", "de2", "dei3"],
    "地": ["di4", "de5"],
    "的": ["de5", "di4", "di2"],
    "会": ["hui4", "kuai4"],
    "好": ["hao3", "hao4"],
    "只": ["zhi3", "zhi1"],
    "都": ["dou1", "du1"],
    "觉": ["jue2", "jiao4"],
    "数": ["shu4", "shu3"],
    "发": ["fa1", "fa4"],
    "为": ["wei4", "wei2"],
    "种": ["zhong3", "zhong4"],
    "大": ["da4", "dai4"],
    "处": ["chu4", "chu3"],
    "调": ["diao4", "tiao2"],
    "教": ["jiao4", "jiao1"],
    "朝": ["chao2", "zhao1"],
    "传": ["chuan2", "zhuan4"],
    "便": ["bian4", "pian2"],
    "空": ["kong1", "kong4"],
    "少": ["shao3", "shao4"],
    "应": ["ying1", "ying4"],
    "要": ["yao4", "yao1"],
    "看": ["kan4", "kan1"],
    "干": ["gan4", "gan1"],
    "将": ["jiang1", "jiang4"],
    "和": ["he2", "huo5", "he4"],
    "相": ["xiang1", "xiang4"],
    "当": ["dang1", "dang4"],
    "难": ["nan2", "nan4"],
    "间": ["jian1", "jian4"],
    "分": ["fen1", "fen4"],
    "查": ["cha2", "zha1"],
    "喝": ["he1", "he4"],
    "中": ["zhong1", "zhong4"],
    "量": ["liang4", "liang2"],
    "没": ["mei2", "mo4"],
    "藏": ["cang2", "zang4"],
    "降": ["jiang4", "xiang2"],
}
POLY_WEIGHTS = [10, 4, 2, 1]
DEFAULT_WEIGHT = 10

ZH_SUBJECTS = ["我", "你", "他", "她", "我们", "你们", "他们", "老师", "学生",
               "妈妈", "爸爸", "朋友", "医生", "同学", "经理", "孩子", "哥哥",
               "姐姐", "弟弟", "妹妹", "奶奶", "爷爷", "大家", "同事"]
ZH_TIMES = ["今天", "明天", "昨天", "上午", "下午", "晚上", "周末", "现在",
            "早上", "中午", "每天", "以后", "刚才", "去年", "明年"]
ZH_PLACES = ["学校", "公司", "银行", "医院", "商店", "图书馆", "公园", "餐厅",
             "家里", "北京", "上海", "机场", "超市", "车站", "教室", "办公室",
             "饭店", "市场", "宿舍", "电影院"]
ZH_VERB_OBJ = [("喝", ["茶", "咖啡", "水", "牛奶", "果汁", "啤酒"]),
               ("吃", ["米饭", "面条", "水果", "饺子", "早饭", "午饭", "晚饭", "蛋糕"]),
               ("看", ["电影", "书", "报纸", "电视", "比赛", "医生"]),
               ("买", ["衣服", "手机", "电脑", "东西", "水果", "车票", "词典"]),
               ("学习", ["中文", "英语", "历史", "数学", "音乐", "法律"]),
               ("听", ["音乐", "广播", "课", "故事"]),
               ("写", ["作业", "汉字", "报告", "日记", "信"]),
               ("做", ["作业", "饭", "运动", "工作", "实验"]),
               ("打", ["电话", "篮球", "网球", "太极拳"]),
               ("查", ["资料", "词典", "地图", "邮件"])]
ZH_ADJ = ["好", "忙", "累", "高兴", "漂亮", "便宜", "干净", "重要", "有意思",
          "方便", "容易", "快乐", "安静", "热闹", "舒服", "简单", "认真", "努力"]
ZH_NUMS = ["一", "两", "三", "四", "五", "六", "七", "八", "九", "十"]

ZH_TEMPLATES = [
    "{s}{t}去{p}{v}{o}",
    "{s}{t}在{p}{v}{o}",
    "{s}喜欢{v}{o}",
    "{t}{s}要去{p}",
    "{s}觉得{o}很{a}",
    "{s}和{s2}一起{v}{o}",
    "{s}差不多{n}点去{p}",
    "{s}想{v}一点儿{o}",
    "{p}的{o}很{a}",
    "{s}{t}不想去{p}",
    "{s}每次都在{p}{v}{o}",
    "{s}已经{v}了{o}",
    "{t}的{o}非常{a}",
    "{s}告诉我{s2}在{p}",
    "{s}打算{t}{v}{o}",
    "{s}的{o}在{p}",
]

EN_NOUNS = """time year people way day man thing woman life child world school
state family student group country problem hand part place case week company
system program question work government number night point home water room mother
area money story fact month lot right study book eye job word business issue side
kind head house service friend father power hour game line end member law car city
community name president team minute idea kid body information back parent face
others level office door health person art war history party result change morning
reason research girl guy moment air teacher force education foot boy age policy
music market sense nation plan college interest death experience effect class
control care field development role effort rate heart drug show leader light voice
wife police mind price report decision son view relationship town road arm difference
value building action model season society tax director position player record paper
space ground form event official matter center couple site project activity star table
need court oil situation cost industry figure street image phone data picture practice
piece land product doctor wall patient worker news test movie north love support
technology step baby computer type attention film tree source organization hair window
evidence population site garden river letter horse forest church ship island mountain
village king queen castle captain soldier stranger journey bread horse dinner fire
silence shadow evening summer winter garden cottage servant master lady gentleman
sister brother uncle daughter husband neighbour carriage kitchen chamber meadow
""".split()
EN_VERBS = """walked looked turned opened closed answered asked began seemed
followed remembered wondered carried returned stopped watched listened laughed cried
smiled whispered noticed believed wanted hoped learned promised waited started
finished reached passed entered climbed crossed gathered pulled pushed raised lifted
placed touched dropped showed called told gave took found made knew thought felt left
brought kept held stood sat ran heard saw came went spoke wrote read understood
""".split()
EN_ADJS = """old young little great small large long good new high different important
bad early dark strange quiet happy poor rich beautiful cold warm bright heavy gentle
silent curious narrow wide deep broken green white black red golden tired honest
wild simple sudden certain proud careful ancient lonely pleasant terrible
""".split()
EN_ADVS = """slowly quickly quietly suddenly gently softly carefully always never
often again already almost perhaps certainly finally nearly rather still once
""".split()
EN_PREPS = "in on at into from with through across near behind beside toward".split()
EN_TEMPLATES = [
    "the {a} {n} {v} {p} the {n2}",
    "{adv} the {n} {v} and the {a} {n2} {v2}",
    "she {v} {p} the {a} {n} and {v2} {adv}",
    "he {v} that the {n} was {a}",
    "they {v} {adv} {p} the {n} of the {a} {n2}",
    "it was a {a} {n} and the {n2} {v} {adv}",
    "i {v} the {n} {p} my {n2}",
    "we {v} {p} the {a} {n} for a long {n2}",
    "there was a {a} {n} {p} the {n2}",
    "the {n} {v} {adv} and {v2} {p} the {n2}",
    "the {ns} were {ac} than the {n2s}",
    "{adv} the {ns} {v} {p} the {asup} {n2}",
    "the {aness} of the {n} {v} {p} the {n2s}",
    "she is {ving} {p} the {ns} {ly}",
]


def plural(w):
    if w.endswith(("s", "x", "ch", "sh")):
        return w + "es"
    if w.endswith("y") and w[-2] not in "aeiou":
        return w[:-1] + "ies"
    return w + "s"


def suffixed(w, suffix):
    if w.endswith("e") and suffix[0] in "aeiou":
        w = w[:-1]
    elif w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
        w = w[:-1] + "i"
    return w + suffix


def present_participle(past):
    stem = past[:-2] if past.endswith("ed") else past
    return stem + "ing"


JA_COMPOUNDS = {
    "今日": "kyou", "明日": "ashita", "昨日": "kinou", "日本": "nihon",
    "東京": "toukyou", "大人": "otona", "一人": "hitori", "二人": "futari",
    "時計": "tokei", "先生": "sensei", "学校": "gakkou", "電車": "densha",
    "会社": "kaisha", "天気": "tenki", "友達": "tomodachi", "大学": "daigaku",
    "時間": "jikan", "言葉": "kotoba", "仕事": "shigoto", "名前": "namae",
}


def gb2312_level1():
    chars = []
    for hi in range(0xB0, 0xD8):
        for lo in range(0xA1, 0xFF):
            try:
                chars.append(bytes([hi, lo]).decode("gb2312"))
            except UnicodeDecodeError:
                pass
    return chars


def jis_level1():
    chars = []
    for hi in range(0xB0, 0xD0):
        for lo in range(0xA1, 0xFF):
            try:
                chars.append(bytes([hi, lo]).decode("euc_jp"))
            except UnicodeDecodeError:
                pass
    return chars


def zh_reading(ch):
    r = pinyin(ch, style=Style.TONE3, neutral_tone_with_five=True)[0][0]
    return r if ROMAN_RE.match(r) else None


def make_zh_corpus(rng, n):
    lines = set()
    out = []
    while len(out) < n:
        tpl = rng.choice(ZH_TEMPLATES)
        v, objs = rng.choice(ZH_VERB_OBJ)
        line = tpl.format(s=rng.choice(ZH_SUBJECTS), s2=rng.choice(ZH_SUBJECTS),
                          t=rng.choice(ZH_TIMES), p=rng.choice(ZH_PLACES), v=v,
                          o=rng.choice(objs), a=rng.choice(ZH_ADJ),
                          n=rng.choice(ZH_NUMS))
        if line not in lines:
            lines.add(line)
            out.append(line)
    return out


def make_en_corpus(rng, n):
    out = []
    for _ in range(n):
        tpl = rng.choice(EN_TEMPLATES)
        out.append(tpl.format(a=rng.choice(EN_ADJS), n=rng.choice(EN_NOUNS),
                              n2=rng.choice(EN_NOUNS), v=rng.choice(EN_VERBS),
                              v2=rng.choice(EN_VERBS), p=rng.choice(EN_PREPS),
                              adv=rng.choice(EN_ADVS),
                              ns=plural(rng.choice(EN_NOUNS)),
                              n2s=plural(rng.choice(EN_NOUNS)),
                              ac=suffixed(rng.choice(EN_ADJS), "er"),
                              asup=suffixed(rng.choice(EN_ADJS), "est"),
                              aness=suffixed(rng.choice(EN_ADJS), "ness"),
                              ly=suffixed(rng.choice(EN_ADJS), "ly"),
                              ving=present_participle(rng.choice(EN_VERBS))))
    return out


def write_zh_lexicon(path, corpus):
    chars = gb2312_level1()
    seen = set(chars)
    for line in corpus:
        for ch in line:
            if ch not in seen:
                seen.add(ch)
                chars.append(ch)
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Mandarin sample lexicon: surface<TAB>pinyin+tone<TAB>weight\n")
        f.write("# GB2312 level-1 characters plus sample-corpus coverage.\n")
        for ch in chars:
            if ch in ZH_POLYPHONES:
                for r, w in zip(ZH_POLYPHONES[ch], POLY_WEIGHTS):
                    f.write(f"{ch}\t{r}\t{w}\n")
                continue
            r = zh_reading(ch)
            if r:
                f.write(f"{ch}\t{r}\t{DEFAULT_WEIGHT}\n")


def write_ja_lexicon(path):
    kks = pykakasi.kakasi()
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Japanese sample lexicon: surface<TAB>hepburn<TAB>weight\n")
        f.write("# JIS X 0208 level-1 kanji plus a few compound readings.\n")
        for ch in jis_level1():
            parts = kks.convert(ch)
            if len(parts) != 1:
                continue
            r = parts[0]["hepburn"]
            if ROMAN_RE.match(r) and r != ch:
                f.write(f"{ch}\t{r}\t1\n")
        for word, r in JA_COMPOUNDS.items():
            f.write(f"{word}\t{r}\t1\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent / "data"))
    ap.add_argument("--seed", type=int, default=20240613)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    rng = random.Random(args.seed)
    zh_corpus = make_zh_corpus(rng, 1000)
    (out / "zh_corpus.txt").write_text("\n".join(zh_corpus) + "\n", encoding="utf-8")
    write_zh_lexicon(out / "zh_lexicon.tsv", zh_corpus)
    write_ja_lexicon(out / "ja_lexicon.tsv")
    en = make_en_corpus(rng, 4000)
    (out / "en_sample.txt").write_text("\n".join(en) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
