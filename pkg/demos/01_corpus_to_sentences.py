"""Walk a raw book excerpt through ingestion and sentence filtering.

Shows which sentences survive the fifteen rules and why the others
were dropped.
"""

from mcqforge.filtering import RULE_INFO, SentenceFilter, filter_corpus
from mcqforge.ingest import ManifestEntry, ingest_book

BOOK = """\
The heart pumps blood through the whole body. Blood carries oxygen
from the lungs to every muscle. The muscles use oxygen to release
energy from food.

Can you name the parts of the heart? See figure 4 for a diagram.
This amazing organ never stops working!

Water in rivers moves from high ground toward the sea. The moving
water carves valleys into soft rock over long ages. Sand and mud
settle where the current slows down.
"""


def main():
    entry = ManifestEntry("demo", "Demo excerpt", "-", exportable=True)
    paragraphs = ingest_book(BOOK, entry)
    sf = SentenceFilter()

    for p in paragraphs:
        print(f"\n== {p.id}")
        for s in p.sentences:
            d = sf.classify(s)
            if d.accepted:
                print(f"  keep   {s.text}")
            else:
                rules = ", ".join(sorted(r.value for r in d.fired_ids))
                print(f"  drop   {s.text}")
                for f in d.fired_rules:
                    _, why = RULE_INFO[f.rule]
                    print(f"         {f.rule.value} ({why}): {f.evidence}")

    kept, report = filter_corpus(paragraphs)
    print(f"\nparagraphs kept: {report.n_paragraphs_accepted}/{report.n_paragraphs}")
    print(f"sentences kept:  {report.n_sentences_accepted}/{report.n_sentences}")


if __name__ == "__main__":
    main()
