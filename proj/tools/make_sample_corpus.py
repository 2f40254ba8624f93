#!/usr/bin/env python3
"""Generate the bundled sample corpus: 50 short Polish texts in the style of
public procurement appeal rulings.

The texts are assembled from sentence templates with a fixed seed, so the
output is reproducible:

    python3 tools/make_sample_corpus.py data/sample_pl
"""

import random
import sys
from pathlib import Path

SEED = 2014
DOCUMENTS = 50

# nominative, genitive, locative
CITIES = [
    ("Kraków", "Krakowa", "Krakowie"), ("Warszawa", "Warszawy", "Warszawie"),
    ("Gdańsk", "Gdańska", "Gdańsku"), ("Poznań", "Poznania", "Poznaniu"),
    ("Wrocław", "Wrocławia", "Wrocławiu"), ("Łódź", "Łodzi", "Łodzi"),
    ("Lublin", "Lublina", "Lublinie"), ("Katowice", "Katowic", "Katowicach"),
    ("Rzeszów", "Rzeszowa", "Rzeszowie"), ("Białystok", "Białegostoku", "Białymstoku"),
    ("Olsztyn", "Olsztyna", "Olsztynie"), ("Opole", "Opola", "Opolu"),
]
JUDGES = ["Anna Kowalska", "Marek Nowak", "Ewa Wiśniewska", "Piotr Zieliński",
          "Katarzyna Wójcik", "Tomasz Lewandowski"]
MONTHS = ["stycznia", "lutego", "marca", "kwietnia", "maja", "czerwca", "lipca",
          "sierpnia", "września", "października", "listopada", "grudnia"]

TOPICS = {
    "odpady": {
        "authorities": ["Gmina {city}", "Urząd Miasta {city_gen}", "Związek Międzygminny Czysty Region w {city_loc}"],
        "contractors": ["Przedsiębiorstwo Usług Komunalnych Empol Sp. z o.o.",
                        "konsorcjum Sita Małopolska", "Remondis Sp. z o.o.",
                        "Miejskie Przedsiębiorstwo Oczyszczania w {city_loc}"],
        "subject": "odbieranie i zagospodarowanie odpadów komunalnych od właścicieli nieruchomości zamieszkałych na terenie gminy {city_gen}",
        "sentences": [
            "Przedmiotem zamówienia jest odbieranie odpadów komunalnych od właścicieli nieruchomości zamieszkałych na terenie gminy {city_gen}.",
            "Wykonawca zobowiązany jest zapewnić zagospodarowanie odpadów komunalnych zgodnie z wojewódzkim planem gospodarki odpadami.",
            "Zmieszane odpady komunalne należy przekazywać do regionalnej instalacji przetwarzania odpadów komunalnych.",
            "Zamawiający wymagał wpisu do rejestru działalności regulowanej w zakresie odbierania odpadów komunalnych.",
            "Harmonogram odbioru odpadów segregowanych obejmuje papier, szkło oraz tworzywa sztuczne.",
            "Przedsiębiorstwo usług komunalnych wskazało w wyjaśnieniach koszty transportu odpadów do instalacji.",
            "Odwołujący podnosił, że wykonawca Sita Małopolska nie dysponuje bazą magazynowo transportową na terenie gminy.",
            "Spór dotyczy także sposobu ważenia odpadów komunalnych przekazywanych do składowiska.",
        ],
    },
    "budowa": {
        "authorities": ["Generalna Dyrekcja Dróg Krajowych i Autostrad Oddział w {city_loc}",
                        "Zarząd Dróg Wojewódzkich w {city_loc}", "Zarząd Inwestycji Miejskich w {city_loc}"],
        "contractors": ["Budimex S.A.", "Strabag Sp. z o.o.", "Skanska S.A.",
                        "konsorcjum firm Mostostal Warszawa S.A. i Polimex S.A."],
        "subject": "roboty budowlane polegające na przebudowie drogi wojewódzkiej nr {num} w miejscowości {city}",
        "sentences": [
            "Przedmiotem zamówienia są roboty budowlane polegające na przebudowie drogi wojewódzkiej nr {num}.",
            "Zamawiający wymagał wykazania wykonania co najmniej dwóch robót budowlanych o wartości nie mniejszej niż {amount} zł.",
            "Wykaz wykonanych robót budowlanych zawierał pozycje, które nie odpowiadały wymaganiom zamawiającego.",
            "Kierownik budowy powinien posiadać uprawnienia budowlane do kierowania robotami w specjalności drogowej.",
            "Roboty budowlane mają zostać zakończone w terminie określonym w harmonogramie rzeczowo finansowym.",
            "Generalna Dyrekcja Dróg Krajowych i Autostrad jako zamawiający nie żądała przedłożenia kosztorysu ofertowego.",
            "Do oferty dołączono referencje potwierdzające należyte wykonanie robót budowlanych na rzecz innych zamawiających.",
            "Odwołujący zakwestionował sposób wyceny nawierzchni bitumicznej oraz robót ziemnych.",
        ],
    },
    "informatyka": {
        "authorities": ["Urząd Marszałkowski Województwa w {city_loc}", "Zakład Ubezpieczeń Społecznych Oddział w {city_loc}",
                        "Uniwersytet w {city_loc}"],
        "contractors": ["Asseco Poland S.A.", "Comarch S.A.", "Sygnity S.A.", "konsorcjum firm Atos Polska S.A. i Sescom S.A."],
        "subject": "dostawę sprzętu komputerowego oraz wdrożenie zintegrowanego systemu informatycznego",
        "sentences": [
            "Przedmiotem zamówienia jest dostawa sprzętu komputerowego oraz wdrożenie zintegrowanego systemu informatycznego.",
            "Zamawiający wymagał, aby oferowane serwery posiadały co najmniej dwa procesory wielordzeniowe.",
            "Oprogramowanie systemu powinno zapewniać obsługę elektronicznego obiegu dokumentów.",
            "Licencje oprogramowania bazodanowego muszą obejmować wszystkie stanowiska użytkowników.",
            "Systemy informatyczne i sieci komputerowe zamawiającego mają zostać zintegrowane z platformą usług elektronicznych.",
            "Wykonawca przedstawił wykaz wdrożeń zintegrowanego systemu informatycznego w jednostkach administracji publicznej.",
            "Odwołujący twierdził, że zaoferowany sprzęt komputerowy nie spełnia parametrów wydajnościowych.",
        ],
    },
    "medycyna": {
        "authorities": ["Samodzielny Publiczny Szpital Kliniczny nr {num} w {city_loc}",
                        "Wojewódzki Szpital Specjalistyczny w {city_loc}", "Centrum Onkologii w {city_loc}"],
        "contractors": ["GE Medical Systems Polska Sp. z o.o.", "Siemens Healthcare Sp. z o.o.",
                        "Philips Polska Sp. z o.o.", "Aesculap Chifa Sp. z o.o."],
        "subject": "dostawę aparatury medycznej dla samodzielnego publicznego szpitala klinicznego",
        "sentences": [
            "Przedmiotem zamówienia jest dostawa aparatury medycznej dla samodzielnego publicznego szpitala klinicznego.",
            "Zamawiający wymagał, aby tomograf komputerowy posiadał detektor o liczbie rzędów nie mniejszej niż {num}.",
            "Wykonawca GE Medical Systems Polska zaoferował aparat spełniający parametry graniczne opisane w specyfikacji.",
            "Aparat ultrasonograficzny powinien posiadać co najmniej trzy głowice obrazowe.",
            "Serwis gwarancyjny aparatury medycznej ma być świadczony przez autoryzowany podmiot.",
            "Samodzielny publiczny szpital kliniczny dopuścił rozwiązania równoważne w zakresie oprogramowania stacji diagnostycznej.",
            "Odwołujący wskazał, że zaoferowany tomograf komputerowy nie posiada wymaganego certyfikatu.",
        ],
    },
    "kolej": {
        "authorities": ["PKP Polskie Linie Kolejowe S.A. Zakład Linii Kolejowych w {city_loc}",
                        "PKP Polskie Linie Kolejowe S.A. Centrum Realizacji Inwestycji"],
        "contractors": ["Trakcja S.A.", "Torpol S.A.", "ZUE S.A.", "konsorcjum firm Kolejowe Zakłady Automatyki S.A. i Bombardier Transportation"],
        "subject": "modernizację linii kolejowej nr {num} na odcinku {city} {city2}",
        "sentences": [
            "Przedmiotem zamówienia jest modernizacja linii kolejowej nr {num} na odcinku {city} {city2}.",
            "Roboty torowe obejmują wymianę nawierzchni kolejowej oraz przebudowę peronów.",
            "Zamawiający PKP Polskie Linie Kolejowe wymagał doświadczenia w budowie urządzeń sterowania ruchem kolejowym.",
            "Wykonawca powinien dysponować osobą posiadającą świadectwo kwalifikacji w zakresie sterowania ruchem kolejowym.",
            "Harmonogram zamknięć torowych został uzgodniony z przewoźnikami kolejowymi.",
            "Odwołujący zakwestionował wykaz sprzętu, w tym podbijarek torowych i pociągów sieciowych.",
        ],
    },
}

GENERAL = [
    "Ogłoszenie o zamówieniu zostało opublikowane w Dzienniku Urzędowym Unii Europejskiej w dniu {date} r.",
    "Wartość zamówienia przekracza kwoty określone w przepisach wydanych na podstawie art. 11 ust. 8 ustawy Prawo zamówień publicznych.",
    "Odwołujący zarzucił zamawiającemu naruszenie art. {art} ustawy przez zaniechanie wykluczenia wykonawcy {contractor2} z postępowania.",
    "W ocenie odwołującego oferta tego wykonawcy powinna zostać odrzucona, ponieważ nie spełnia wymagań określonych w specyfikacji istotnych warunków zamówienia.",
    "Izba ustaliła, że odwołujący posiada interes w uzyskaniu zamówienia oraz może ponieść szkodę w wyniku naruszenia przez zamawiającego przepisów ustawy.",
    "Izba nie dopatrzyła się przesłanek do odrzucenia odwołania.",
    "Zamawiający w odpowiedzi na odwołanie wniósł o jego oddalenie w całości.",
    "Zdaniem Izby zarzut ten nie zasługuje na uwzględnienie.",
    "Należy zauważyć, że zamawiający nie wezwał wykonawcy do uzupełnienia dokumentów w trybie art. 26 ust. 3 ustawy.",
    "Z tego względu Izba uznała, że zamawiający dokonał czynności z naruszeniem przepisów ustawy.",
    "Wykonawca, który nie wykazał spełniania warunków udziału w postępowaniu, podlega wykluczeniu.",
    "Przedmiotem sporu jest również kwestia, czy wykonawcy należący do tej samej grupy kapitałowej mogą złożyć odrębne oferty.",
    "Odwołujący wskazał, że cena oferty wybranej jest rażąco niska w stosunku do przedmiotu zamówienia.",
    "Zamawiający wezwał wykonawcę do złożenia wyjaśnień dotyczących elementów oferty mających wpływ na wysokość ceny.",
    "W złożonych wyjaśnieniach wykonawca wskazał na oszczędności wynikające z zastosowanych rozwiązań.",
    "Izba podziela stanowisko zamawiającego, że wyjaśnienia te były wystarczające.",
    "Zgodnie z treścią formularza ofertowego wykonawca zaoferował realizację zamówienia w terminie {num} dni.",
    "W formularzu ofertowym wykonawca nie wskazał części zamówienia, której wykonanie zamierza powierzyć podwykonawcom.",
    "Konsorcjum firm złożyło ofertę z najniższą ceną, jednak nie przedłożyło pełnomocnictwa dla lidera.",
    "Spółka z ograniczoną odpowiedzialnością z siedzibą w {city_loc} przystąpiła do postępowania odwoławczego po stronie zamawiającego.",
    "Na rozprawie strony podtrzymały dotychczasowe stanowiska.",
    "Izba oddaliła wniosek dowodowy odwołującego jako zmierzający do przedłużenia postępowania.",
    "Dowód z dokumentów złożonych przez przystępującego nie potwierdził okoliczności, na które się powołano.",
    "Zamawiający dokonał wyboru najkorzystniejszej oferty w dniu {date} r.",
    "Termin składania ofert upłynął w dniu {date} r.",
    "Izba wskazuje, że zamawiający ma obowiązek badać oferty z zachowaniem zasady uczciwej konkurencji i równego traktowania wykonawców.",
    "Zarzut dotyczący zaniechania odrzucenia oferty jako niezgodnej z treścią specyfikacji okazał się zasadny.",
    "Wobec powyższego Izba nie znalazła podstaw do uwzględnienia odwołania.",
    "Wadium zostało wniesione w formie gwarancji ubezpieczeniowej.",
    "Odwołanie zostało wniesione w terminie i spełnia wymagania formalne.",
]


def fmt(template, ctx):
    return template.format(**ctx)


def random_date(rng):
    return f"{rng.randint(1, 28)} {rng.choice(MONTHS)} {rng.randint(2008, 2013)}"


def make_document(index, rng):
    topic_name = list(TOPICS)[index % len(TOPICS)]
    topic = TOPICS[topic_name]
    city, city2 = rng.sample(CITIES, 2)
    ctx = {
        "city": city[0],
        "city_gen": city[1],
        "city_loc": city[2],
        "city2": city2[0],
        "num": rng.randint(4, 300),
        "amount": f"{rng.randint(1, 40)} 000 000",
        "date": random_date(rng),
        "art": rng.choice(["24 ust. 2 pkt 4", "89 ust. 1 pkt 2", "90 ust. 3", "7 ust. 1", "26 ust. 3"]),
    }
    ctx["contractor2"] = fmt(rng.choice(topic["contractors"]), ctx)
    authority = fmt(rng.choice(topic["authorities"]), ctx)
    contractor = fmt(rng.choice(topic["contractors"]), ctx)
    verdict = rng.choice([
        "uwzględnia odwołanie i nakazuje zamawiającemu unieważnienie czynności wyboru najkorzystniejszej oferty oraz powtórzenie czynności badania i oceny ofert;",
        "oddala odwołanie;",
    ])
    paying = "zamawiającego" if verdict.startswith("uwzględnia") else "odwołującego"

    lines = [
        f"Sygn. akt: KIO {rng.randint(100, 2999)}/{rng.randint(8, 13):02d}",
        f"WYROK z dnia {random_date(rng)} r.",
        f"Krajowa Izba Odwoławcza w składzie: Przewodniczący: {rng.choice(JUDGES)}. Protokolant: {rng.choice(JUDGES)}.",
        f"po rozpoznaniu na rozprawie w dniu {random_date(rng)} r. w Warszawie odwołania wniesionego do Prezesa "
        f"Krajowej Izby Odwoławczej przez wykonawcę {contractor} w postępowaniu prowadzonym przez zamawiającego "
        f"{authority} na {fmt(topic['subject'], ctx)}, orzeka:",
        f"1. {verdict}",
        f"2. kosztami postępowania obciąża {paying} i zalicza w poczet kosztów postępowania odwoławczego kwotę "
        f"{rng.choice(['15 000', '20 000'])} zł uiszczoną przez odwołującego tytułem wpisu od odwołania.",
        "Uzasadnienie",
        f"Zamawiający {authority} prowadzi postępowanie o udzielenie zamówienia publicznego w trybie przetargu "
        f"nieograniczonego na {fmt(topic['subject'], ctx)}.",
    ]
    body = [fmt(s, ctx) for s in rng.sample(GENERAL, rng.randint(8, 13))]
    body += [fmt(s, ctx) for s in rng.sample(topic["sentences"], rng.randint(3, 5))]
    rng.shuffle(body)
    lines += body
    lines.append("Biorąc pod uwagę powyższe, orzeczono jak w sentencji.")
    lines.append("O kosztach postępowania orzeczono stosownie do jego wyniku na podstawie art. 192 ust. 9 i 10 ustawy.")
    return "\n".join(lines) + "\n"


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/sample_pl")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    for i in range(DOCUMENTS):
        (out / f"kio_{i + 1:03d}.txt").write_text(make_document(i, rng), encoding="utf-8")


if __name__ == "__main__":
    main()
