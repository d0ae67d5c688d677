#!/usr/bin/env python3
"""
🧪 Script de test rapide du système
Vérifie que tous les composants fonctionnent correctement
"""

import sys
from fractions import Fraction
from pathlib import Path

# Ajouter la racine du projet au PYTHONPATH
sys.path.insert(0, str(Path(__file__).parent.parent))


def test_configuration():
    """Test de la configuration"""
    print("⚙️ Test configuration...")

    try:
        from src.utils.config import ConfigManager

        config = ConfigManager()
        verification = config.get_verification_config()
        output = config.get_output_config()

        if verification and output:
            print("  ✅ Configuration OK")
            print(f"  📊 Bornes: N≤{verification.get('max_N')}, n≤{verification.get('max_n')}, f≤{verification.get('max_f')}")
            print(f"  🖨️ Format: {output.get('format')}")
            return True
        print("  ❌ Configuration incomplète")
        return False

    except Exception as e:
        print(f"  ❌ Erreur configuration: {e}")
        return False


def test_characters():
    """Test de l'énumération des caractères"""
    print("🎭 Test caractères de Dirichlet...")

    try:
        from src.arith.exactnum import euler_phi
        from src.characters.dirichlet import enumerate_characters, get_character

        for f in range(1, 25):
            if len(enumerate_characters(f)) != euler_phi(f):
                print(f"  ❌ Nombre de caractères incorrect modulo {f}")
                return False
        chi = get_character(4, 1)
        if chi.parity != -1 or chi.conductor != 4:
            print("  ❌ Caractère impair modulo 4 incorrect")
            return False
        print("  ✅ φ(f) caractères pour f ≤ 24, χ₋₄ OK")
        return True

    except Exception as e:
        print(f"  ❌ Erreur: {e}")
        return False


def test_numbers():
    """Test de valeurs connues de B_{N,n,χ}"""
    print("🔔 Test nombres B_{N,n,χ}...")

    try:
        from src.bernoulli.verification import compute_numbers
        from src.characters.dirichlet import get_character

        values = compute_numbers(1, get_character(4, 1), 0, 4, "all")
        expected = [0, Fraction(-1, 2), 0, Fraction(3, 2), 0]
        if values != expected:
            print(f"  ❌ χ₋₄: {values}")
            return False
        print("  ✅ B_{1,n,χ₋₄} = 0, -1/2, 0, 3/2, 0 (toutes méthodes d'accord)")

        trivial = compute_numbers(1, get_character(1, 0), 0, 2, "all")
        if trivial != [1, Fraction(1, 2), Fraction(1, 6)]:
            print(f"  ❌ Caractère trivial: {trivial}")
            return False
        print("  ✅ B_{1,n,1} = 1, 1/2, 1/6")
        return True

    except Exception as e:
        print(f"  ❌ Erreur: {e}")
        return False


def test_verification():
    """Test d'une suite de vérification réduite"""
    print("🔎 Test suites de vérification...")

    try:
        from src.bernoulli.verification import run_suite

        reports = run_suite("all", 2, 4, 5, workers=2)
        failed = [r for r in reports if not r.ok]
        if failed:
            for r in failed:
                print(f"  ❌ {r.name}: {r.failed} échec(s)")
            return False
        print(f"  ✅ {sum(r.passed for r in reports)} cellules vérifiées")
        return True

    except Exception as e:
        print(f"  ❌ Erreur vérification: {e}")
        return False


def run_full_test():
    """Exécute tous les tests"""
    print("🧪 === TEST COMPLET DU SYSTÈME ===\n")

    tests = [
        ("Configuration", test_configuration),
        ("Caractères", test_characters),
        ("Nombres", test_numbers),
        ("Vérification", test_verification),
    ]

    results = []

    for test_name, test_func in tests:
        print(f"\n📋 {test_name}")
        print("-" * 40)

        try:
            success = test_func()
            results.append((test_name, success))
        except Exception as e:
            print(f"  ❌ Erreur inattendue: {e}")
            results.append((test_name, False))

    # Résumé final
    print("\n🎯 === RÉSUMÉ DES TESTS ===")
    print("-" * 40)

    success_count = 0
    for test_name, success in results:
        status = "✅" if success else "❌"
        print(f"{status} {test_name}")
        if success:
            success_count += 1

    print(f"\n📊 Résultat: {success_count}/{len(results)} tests réussis")

    if success_count == len(results):
        print("🎉 Tous les tests sont passés ! Le système est prêt.")
        return True
    print("⚠️ Certains tests ont échoué. Vérifiez l'installation.")
    return False


if __name__ == "__main__":
    success = run_full_test()
    sys.exit(0 if success else 1)
