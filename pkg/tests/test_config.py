"""
Tests pour le module de configuration
"""

import pytest
import os
from unittest.mock import patch, mock_open
from src.utils.config import ConfigManager


pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def no_dotenv():
    with patch("src.utils.config.load_dotenv"):
        yield


class TestConfigManager:

    @patch.dict(os.environ, {
        'GHB_LOG_LEVEL': 'DEBUG',
        'GHB_VERIFY_MAX_N': '5',
        'GHB_OUTPUT_FORMAT': 'csv'
    })
    def test_config_from_env_vars(self, tmp_path):
        """Test de chargement depuis les variables d'environnement"""
        config = ConfigManager(str(tmp_path / "absent.json"))

        assert config.get_logging_config()['level'] == 'DEBUG'
        assert config.get_verification_config()['max_N'] == 5
        assert config.get_output_config()['format'] == 'csv'

    @patch("pathlib.Path.exists")
    @patch("builtins.open", new_callable=mock_open, read_data='{"verification": {"max_f": 12}}')
    def test_config_from_json_file(self, mock_file, mock_exists):
        """Test de chargement depuis un fichier JSON"""
        mock_exists.return_value = True

        config = ConfigManager()
        verification = config.get_verification_config()

        assert verification['max_f'] == 12
        # les autres clés gardent leurs valeurs par défaut
        assert verification['max_N'] == 3
        assert config.get_output_config()['format'] == 'json'

    @patch.dict(os.environ, {'GHB_TEST_LOG': 'logs/run.log'})
    def test_env_placeholders(self, tmp_path):
        """Test du remplacement ${VAR}"""
        path = tmp_path / "config.json"
        path.write_text('{"logging": {"log_file": "${GHB_TEST_LOG}"}}', encoding='utf-8')

        config = ConfigManager(str(path))

        assert config.get_logging_config()['log_file'] == 'logs/run.log'

    def test_malformed_file(self, tmp_path, caplog):
        """Un fichier invalide retombe sur les valeurs par défaut"""
        path = tmp_path / "config.json"
        path.write_text('{"verification": ', encoding='utf-8')

        config = ConfigManager(str(path))

        assert config.get_verification_config()['max_n'] == 10
        assert "Erreur lecture config" in caplog.text

    def test_default_values(self, tmp_path):
        """Test des valeurs par défaut"""
        with patch.dict(os.environ, {}, clear=True):
            config = ConfigManager(str(tmp_path / "absent.json"))

        verification = config.get_verification_config()
        output = config.get_output_config()

        assert verification == {'max_N': 3, 'max_n': 10, 'max_f': 8, 'workers': 4}
        assert output['decimal'] == False
        assert output['decimal_digits'] == 12
        assert config.get_logging_config()['log_file'] == ''
